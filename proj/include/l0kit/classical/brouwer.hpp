#pragma once

// Fixed points of continuous self-maps of a polytope in R^d.

#include <cstddef>

#include "l0kit/classical/vec.hpp"

namespace l0kit::classical {

struct BrouwerOptions {
  double tol = 1e-9;
  /// Damped steps per seed.
  int max_iter = 2000;
  /// Tried before the built-in interior seeds, in order.
  std::vector<Vec> seeds;
  /// Levels of the simplicial fallback, global (grid doubling from 16) and
  /// zoomed (a simplex 8x smaller around the best point) together.
  int max_depth = 24;
  /// Pivot budget per refinement level.
  std::size_t pivot_budget = 400000;
};

struct BrouwerResult {
  Vec point;
  double residual = 0.0;  // |f(point) - point|
  std::size_t evaluations = 0;
  bool subdivision = false;  // true when the simplicial fallback produced the point
};

/// Finds x in conv(vertices) with |f(x) - x| <= tol.
///
/// Damped iteration x <- (x + f(x)) / 2 from up to 8 seeds (the caller's,
/// then the centroid, then centroid/vertex midpoints); if none reaches tol,
/// Sperner path-following on a Freudenthal subdivision of a simplex that
/// contains the polytope, with f composed with the nearest-point projection.
/// Throws NotSelfMap when f visibly leaves the polytope at a vertex or seed,
/// NoConvergence when the subdivision budget runs out.
BrouwerResult solve_brouwer_atom(const AtomMap& f, const std::vector<Vec>& vertices,
                                 const BrouwerOptions& options = {});

/// Slack used by the self-map check: 1e-9 times the polytope scale.
double self_map_slack(const std::vector<Vec>& vertices);

}  // namespace l0kit::classical
