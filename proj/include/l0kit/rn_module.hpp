#pragma once

// E = L0(F, R^d): one d-vector per atom with the atom-wise Euclidean norm.

#include <span>
#include <vector>

#include "l0kit/classical/vec.hpp"
#include "l0kit/l0_scalar.hpp"

namespace l0kit {

using classical::Vec;
using classical::VecView;

class RandomPoint {
 public:
  /// coords[atom] is the section at that atom; every section has length dim.
  RandomPoint(SpacePtr space, std::size_t dim, std::vector<Vec> coords);
  static RandomPoint zero(SpacePtr space, std::size_t dim);
  /// The same vector at every atom.
  static RandomPoint constant(SpacePtr space, Vec value);

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const Vec& operator[](std::size_t atom) const { return coords_[atom]; }
  const Vec& at(std::size_t atom) const { return coords_.at(atom); }
  const std::vector<Vec>& coords() const noexcept { return coords_; }

  friend bool operator==(const RandomPoint& a, const RandomPoint& b) { return a.coords_ == b.coords_; }

 private:
  SpacePtr space_;
  std::size_t dim_;
  std::vector<Vec> coords_;
};

void require_same_shape(const RandomPoint& a, const RandomPoint& b);

RandomScalar random_norm(const RandomPoint& x);
RandomPoint module_scale(const RandomScalar& xi, const RandomPoint& x);
RandomPoint add(const RandomPoint& x, const RandomPoint& y);
RandomPoint subtract(const RandomPoint& x, const RandomPoint& y);
inline RandomPoint operator+(const RandomPoint& x, const RandomPoint& y) { return add(x, y); }
inline RandomPoint operator-(const RandomPoint& x, const RandomPoint& y) { return subtract(x, y); }

/// Piece k of `partition` takes its sections from pieces[k].
RandomPoint glue_points(const MeasurablePartition& partition, std::span<const RandomPoint> pieces);

struct DistanceToSet {
  RandomScalar distance;
  /// Piece k = atoms where generator k attains the minimum (lowest index on ties).
  /// Labels are generator indices, compacted to the generators that are used.
  MeasurablePartition partition;
  /// Generator index chosen at each atom.
  std::vector<std::size_t> chosen;
};

/// d(x, G) = atom-wise min over generators, with an attaining partition.
DistanceToSet distance_to_finite_set(const RandomPoint& x, std::span<const RandomPoint> gens);

class RandomBall {
 public:
  /// radius must be strictly positive at every atom.
  RandomBall(RandomPoint center, RandomScalar radius);
  const RandomPoint& center() const noexcept { return center_; }
  const RandomScalar& radius() const noexcept { return radius_; }

 private:
  RandomPoint center_;
  RandomScalar radius_;
};

/// |x - center| < radius at every atom (strict).
bool ball_contains(const RandomBall& ball, const RandomPoint& x);

/// Integral of |x| / (1 + |x|); metrizes convergence in probability.
double el_quasinorm(const RandomPoint& x);

class AtomwisePolytope;
/// Atom-wise maximal pairwise vertex distance.
RandomScalar random_diameter(const AtomwisePolytope& polytope);

}  // namespace l0kit
