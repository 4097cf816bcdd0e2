#pragma once

// Finitely representable sigma-stable sets.

#include <random>
#include <variant>
#include <vector>

#include "l0kit/rn_module.hpp"

namespace l0kit {

/// sigma(G0): all gluings of a finite generator list along partitions.
class FiniteSigmaHull {
 public:
  explicit FiniteSigmaHull(std::vector<RandomPoint> generators);
  const std::vector<RandomPoint>& generators() const noexcept { return gens_; }
  const SpacePtr& space() const noexcept { return gens_.front().space(); }
  std::size_t dim() const noexcept { return gens_.front().dim(); }

 private:
  std::vector<RandomPoint> gens_;
};

/// {x : x(w) in conv(vertices(w)) for every atom w}.
class AtomwisePolytope {
 public:
  AtomwisePolytope(SpacePtr space, std::size_t dim, std::vector<std::vector<Vec>> vertices);
  /// Same vertex list at every atom.
  static AtomwisePolytope uniform(SpacePtr space, std::vector<Vec> vertices);

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Vec>& vertices(std::size_t atom) const { return vertices_.at(atom); }
  const std::vector<std::vector<Vec>>& all_vertices() const noexcept { return vertices_; }

  /// Per-atom Euclidean distance to the section.
  RandomScalar distance(const RandomPoint& x) const;
  /// The vertex-list element `k` (clamped to the last vertex) as a random point.
  RandomPoint vertex_point(std::size_t k) const;

 private:
  SpacePtr space_;
  std::size_t dim_;
  std::vector<std::vector<Vec>> vertices_;
};

class EpsilonBall {
 public:
  explicit EpsilonBall(RandomBall ball) : ball_(std::move(ball)) {}
  const RandomBall& ball() const noexcept { return ball_; }
  const SpacePtr& space() const noexcept { return ball_.center().space(); }
  std::size_t dim() const noexcept { return ball_.center().dim(); }

 private:
  RandomBall ball_;
};

using SetSpec = std::variant<FiniteSigmaHull, AtomwisePolytope, EpsilonBall>;

const SpacePtr& spec_space(const SetSpec& spec);
std::size_t spec_dim(const SetSpec& spec);
const char* spec_kind(const SetSpec& spec);

using Rng = std::mt19937_64;

/// A pseudo-random member of the set. Polytopes: per atom a vertex, a
/// two-vertex combination or a Dirichlet(1) combination; hulls: a random
/// gluing of generators; balls: a point strictly inside.
RandomPoint sample_point(const SetSpec& spec, Rng& rng);

/// Section-wise sample of a vertex list, used by the per-atom checks.
Vec sample_in_hull(const std::vector<Vec>& vertices, Rng& rng);

}  // namespace l0kit
