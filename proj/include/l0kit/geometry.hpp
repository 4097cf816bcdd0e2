#pragma once

// L0-convex geometry: random convex combinations, the Schauder projection
// onto a finite net, and separation from atom-wise polytopes.

#include <span>

#include "l0kit/set_spec.hpp"

namespace l0kit {

/// weights[i] >= 0 with sum 1 (within 1e-12) at every atom, else NotConvexWeights.
RandomPoint l0_convex_combination(std::span<const RandomScalar> weights, std::span<const RandomPoint> points);

class ProjectionSpec {
 public:
  ProjectionSpec(std::vector<RandomPoint> generators, RandomScalar epsilon);
  const std::vector<RandomPoint>& generators() const noexcept { return gens_; }
  const RandomScalar& epsilon() const noexcept { return eps_; }

 private:
  std::vector<RandomPoint> gens_;
  RandomScalar eps_;
};

/// P(x) = sum u_i x_i / sum u_i with u_i = max(0, eps - |x - x_i|), atom-wise.
/// Throws OutsideEnlargement (with the atoms) where every u_i is zero.
RandomPoint schauder_projection(const ProjectionSpec& spec, const RandomPoint& x);

/// Distance below which an atom counts as inside the polytope.
inline constexpr double kSeparationFloor = 1e-9;

struct SeparationResult {
  RandomPoint functional;      // y(w); f(z)(w) = <y(w), z(w)>
  Event strict_event;          // atoms with distance > kSeparationFloor
  RandomScalar sup_over_G;     // max over the section of f
  RandomScalar value_at_x;     // f(x)
  RandomScalar distance;       // per-atom distance from x to the section
};

/// Nearest-point functional y = x - proj(x) where x is outside; zero elsewhere.
SeparationResult separate(const RandomPoint& x, const AtomwisePolytope& set);

struct NormalStructure {
  RandomPoint barycenter;   // vertex average
  RandomScalar radius;      // max over vertices of |barycenter - v|
  RandomScalar diameter;
  /// radius < diameter at every atom (requires positive diameter everywhere).
  bool holds = false;
};

NormalStructure normal_structure_check(const AtomwisePolytope& set);

}  // namespace l0kit
