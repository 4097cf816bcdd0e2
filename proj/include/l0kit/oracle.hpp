#pragma once

// Per-atom classical pipelines. Each function sees a single atom only: a
// vertex list, plain R^d maps and scalar tolerances. Running them atom by
// atom is the independent check on the random-module solvers.

#include <vector>

#include "l0kit/solvers.hpp"

namespace l0kit::oracle {

struct AtomAnswer {
  Vec point;
  double residual = 0.0;
  std::size_t iterations = 0;  // contraction steps, or map evaluations
  std::size_t stage = 0;       // accepted schedule stage (0-based)
};

/// x <- S(x) + shift until the step is <= tol (1 - alpha) / alpha.
AtomAnswer contraction_atom(const AtomMap& S, double alpha, VecView shift, VecView x0, double tol,
                            std::size_t max_iter);

/// One approximation stage on conv(vertices): |T(x) - x| < eps.
AtomAnswer approx_atom(const AtomMap& T, const std::vector<Vec>& vertices, double eps,
                       const SchauderOptions& options, const Vec* warm_start = nullptr);

/// Schedule walk with warm starts and polishing; accepts on residual <= tol
/// or |dx| / (1 + |dx|) <= tol.
AtomAnswer schauder_atom(const AtomMap& T, const std::vector<Vec>& vertices, const std::vector<double>& schedule,
                         double tol, const SchauderOptions& options);

/// Fixed point of S + T through the resolvent (I - S)^{-1} T.
AtomAnswer krasnoselskii_atom(const AtomMap& S, double alpha, const AtomMap& T, const std::vector<Vec>& vertices,
                              const std::vector<double>& schedule, double tol, const SplittingOptions& options);

/// Greedy farthest-point subset of `search`, starting at entry 0.
std::vector<Vec> greedy_subset(const std::vector<Vec>& search, double threshold);

}  // namespace l0kit::oracle
