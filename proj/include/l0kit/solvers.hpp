#pragma once

// Fixed-point procedures for sigma-stable maps on atom-wise polytopes:
// contraction iteration, approximate Schauder fixed points and their
// schedule-driven refinement, Krasnoselskii splitting and the lift of a
// random operator.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "l0kit/compactness.hpp"

namespace l0kit {

using classical::AtomMap;

/// A sigma-stable map in its canonical finite form: one section map per atom.
class StableMapping {
 public:
  StableMapping(SpacePtr space, std::size_t dim, std::vector<AtomMap> maps);
  static StableMapping uniform(SpacePtr space, std::size_t dim, AtomMap map);

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return dim_; }
  const AtomMap& atom_map(std::size_t atom) const { return maps_.at(atom); }

  /// Section map at one atom; checks the output length and finiteness.
  Vec apply(std::size_t atom, VecView x) const;
  RandomPoint operator()(const RandomPoint& x) const;

 private:
  SpacePtr space_;
  std::size_t dim_;
  std::vector<AtomMap> maps_;
};

/// Arbitrary map on E, for testing whether it is sigma-stable at all.
using WholeMap = std::function<RandomPoint(const RandomPoint&)>;

struct SigmaStabilityReport {
  struct Witness {
    std::vector<std::size_t> labels;  // the partition that breaks gluing
    std::size_t atom = 0;
    double deviation = 0.0;
  };
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst_deviation = 0.0;
  std::optional<Witness> witness;  // first failing trial
  bool passed() const noexcept { return failures == 0; }
};

/// Checks T(glue(x_k)) == glue(T(x_k)) within 1e-12 on random partitions and
/// random members of `domain`.
SigmaStabilityReport check_sigma_stability(const WholeMap& map, const SetSpec& domain, std::size_t trials,
                                           std::uint64_t seed);
SigmaStabilityReport check_sigma_stability(const StableMapping& map, const SetSpec& domain, std::size_t trials,
                                           std::uint64_t seed);

struct ContractionSpec {
  /// alpha must satisfy 0 <= alpha < 1 at every atom.
  ContractionSpec(StableMapping s, RandomScalar alpha);
  StableMapping S;
  RandomScalar alpha;
};

struct LipschitzReport {
  std::size_t pairs = 0;
  std::vector<std::size_t> violating_atoms;  // |S x - S y| > alpha |x - y| (+1e-12 slack)
  double worst_ratio = 0.0;
  bool passed() const noexcept { return violating_atoms.empty(); }
};

LipschitzReport check_lipschitz(const ContractionSpec& spec, const SetSpec& domain, std::size_t pairs,
                                std::uint64_t seed);

struct StageRecord {
  double eps_max = 0.0;           // largest epsilon of the stage
  double eps_min = 0.0;
  std::size_t evaluations = 0;    // section-map evaluations spent in the stage
  double residual_max = 0.0;      // after polishing
  std::optional<double> step;     // el_quasinorm distance to the previous approximant
  std::string net_kind;           // "greedy" or "lattice"
  std::size_t net_pieces = 0;
  std::size_t net_points = 0;     // largest finite set (greedy) or lattice site count
};

struct FixedPointReport {
  RandomPoint point;
  /// |T(point) - point| recomputed from scratch (for splitting: |S x + T x - x|).
  RandomScalar residual;
  /// Declared bound; `strict` selects residual < bound versus residual <= bound.
  RandomScalar bound;
  bool strict = true;
  /// Iterations per atom (contraction) or map evaluations per stage (Schauder type).
  std::vector<std::size_t> iterations;
  std::vector<StageRecord> stages;
  std::optional<NetCertificate> certificate;
  std::optional<RandomScalar> oracle_gap;

  bool bounds_hold() const;
};

/// NoConvergence with the best report reached so far.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& what, FixedPointReport partial, std::vector<std::size_t> atoms = {});
  const FixedPointReport& partial() const noexcept { return partial_; }

 private:
  FixedPointReport partial_;
};

/// x <- S(x) + shift per atom until |x_{k+1} - x_k| <= tol (1 - alpha) / alpha;
/// atoms stop independently. Throws NoConvergenceError after max_iter.
FixedPointReport solve_contraction(const ContractionSpec& spec, const RandomPoint& shift, const RandomPoint& x0,
                                   const RandomScalar& tol, std::size_t max_iter = 100000);

struct SchauderOptions {
  std::uint64_t seed = 0;
  std::size_t self_map_samples = 64;
  /// Per-atom cap for the greedy net's search set; above it the lattice net is used.
  double net_budget = 20000;
  int brouwer_max_iter = 2000;
  /// Extra Brouwer passes with the tolerance divided by 16.
  int retries = 4;
};

/// Net -> projection -> Brouwer on every atom, with the a-posteriori check
/// |T(x) - x| < eps at every atom. `domain` must be an AtomwisePolytope.
FixedPointReport solve_schauder_approx(const StableMapping& T, const SetSpec& domain, const RandomScalar& eps,
                                       const SchauderOptions& options = {},
                                       const std::optional<RandomPoint>& warm_start = std::nullopt);

/// eps_k = 1/k for k = 1..K.
std::vector<RandomScalar> harmonic_schedule(const SpacePtr& space, std::size_t K = 20);
/// eps_k = start * ratio^k for k = 0..count-1.
std::vector<RandomScalar> geometric_schedule(const SpacePtr& space, double start, double ratio, std::size_t count);

/// Runs the approximation along the schedule with warm starts and keeps, per
/// atom, the better of x and T(x). Accepts when every residual is <= tol or
/// consecutive approximants are within tol under el_quasinorm.
FixedPointReport solve_schauder(const StableMapping& T, const SetSpec& domain,
                                const std::vector<RandomScalar>& eps_schedule, double tol,
                                const SchauderOptions& options = {});

struct SplittingOptions {
  SchauderOptions schauder;
  std::size_t hypothesis_samples = 64;
  double inner_tol = 1e-13;
  std::size_t inner_max_iter = 100000;
};

/// Fixed point of S + T via T' = (I - S)^{-1} T, with the schedule scaled by
/// 1 / (1 + alpha) so that the residual of S + T stays below the unscaled eps.
FixedPointReport solve_krasnoselskii(const ContractionSpec& S, const StableMapping& T, const SetSpec& domain,
                                     const std::vector<RandomScalar>& eps_schedule, double tol,
                                     const SplittingOptions& options = {});

/// Random fixed point of a per-atom family of self-maps of one polytope X.
FixedPointReport solve_random_operator(const SpacePtr& space, const std::vector<AtomMap>& ops,
                                       const std::vector<Vec>& X_vertices,
                                       const std::vector<RandomScalar>& eps_schedule, double tol,
                                       const SchauderOptions& options = {});

/// The map (I - S)^{-1} T used by the splitting solver.
StableMapping resolvent_map(const ContractionSpec& S, const StableMapping& T, double inner_tol,
                            std::size_t inner_max_iter);

}  // namespace l0kit
