#pragma once

// Convex polytopes in R^d given by vertex lists: nearest points, search grids
// and implicit lattice nets. These are the per-atom kernels the random-module
// layer and the per-atom oracle both build on.

#include <cstdint>
#include <map>
#include <optional>

#include "l0kit/classical/vec.hpp"

namespace l0kit::classical {

struct NearestPoint {
  Vec point;
  Vec weights;  // convex weights over the vertex list
  double distance = 0.0;
};

/// Euclidean projection of `x` onto conv(vertices) by Wolfe's active-set
/// minimum-norm-point method over the vertex-weight simplex. Vertices are
/// visited in list order so the answer is deterministic.
NearestPoint nearest_point(const std::vector<Vec>& vertices, VecView x);

double distance_to_polytope(const std::vector<Vec>& vertices, VecView x);

/// Largest coordinate magnitude of the vertex list, floored at 1.
double polytope_scale(const std::vector<Vec>& vertices);

/// Max pairwise vertex distance (the diameter of the hull).
double polytope_diameter(const std::vector<Vec>& vertices);

/// Axis-aligned lattice with spacing `h` anchored at the bounding-box corner of
/// the polytope; index range covers the box. Points are kept when within the
/// covering radius h*sqrt(d)/2 of the polytope, and stored projected onto it.
class LatticeCover {
 public:
  LatticeCover(std::vector<Vec> vertices, double spacing);

  double spacing() const noexcept { return h_; }
  /// Every point of the polytope lies within this distance of a cover point.
  double covering_radius() const noexcept { return radius_; }
  std::size_t dim() const noexcept { return lo_.size(); }
  const std::vector<Vec>& vertices() const noexcept { return vertices_; }

  /// Number of lattice sites in the index box (an upper bound on the cover size).
  double site_count() const;
  static double site_count(const std::vector<Vec>& vertices, double spacing);

  /// All cover points: vertices first, then lattice points in lexicographic order.
  std::vector<Vec> enumerate() const;

  /// Projected cover point for a lattice site, or nullopt when the site is
  /// outside the index range or farther than the covering radius from the polytope.
  std::optional<Vec> site_point(const std::vector<std::int64_t>& index) const;

  /// Lattice sites whose stored point can lie within `reach` of `z`
  /// (site within reach + covering radius), lexicographic order.
  std::vector<std::vector<std::int64_t>> sites_near(VecView z, double reach) const;

 private:
  std::vector<Vec> vertices_;
  Vec lo_;
  std::vector<std::int64_t> count_;  // sites per axis
  double h_;
  double radius_;
  mutable std::map<std::vector<std::int64_t>, std::optional<Vec>> cache_;
};

/// Schauder projection of z on a finite point list: weights
/// u_i = max(0, eps - |z - x_i|), result sum(u_i x_i) / sum(u_i).
/// Returns nullopt when every weight is zero (z outside the eps-enlargement).
std::optional<Vec> schauder_combination(const std::vector<Vec>& points, double eps, VecView z);

/// The same projection over an implicit lattice net: every site of `cover`
/// participates, but only sites within eps + covering radius can carry weight.
std::optional<Vec> schauder_combination(const LatticeCover& cover, double eps, VecView z);

}  // namespace l0kit::classical
