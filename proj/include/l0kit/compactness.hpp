#pragma once

// Random total boundedness made executable: epsilon-nets with measurable
// branching, their verification, random indices and random subsequences.

#include <cstdint>
#include <span>
#include <vector>

#include "l0kit/set_spec.hpp"

namespace l0kit {

/// One positive integer per atom.
class RandomIndex {
 public:
  RandomIndex(SpacePtr space, std::vector<std::size_t> values);
  const SpacePtr& space() const noexcept { return space_; }
  std::size_t operator[](std::size_t atom) const { return values_[atom]; }
  const std::vector<std::size_t>& values() const noexcept { return values_; }
  friend bool operator==(const RandomIndex& a, const RandomIndex& b) { return a.values_ == b.values_; }

 private:
  SpacePtr space_;
  std::vector<std::size_t> values_;
};

/// Piece n of `partition` is covered by the sigma-hull of finite_sets[n]
/// within epsilon, atom-wise.
struct NetCertificate {
  RandomScalar epsilon;
  MeasurablePartition partition;
  std::vector<std::vector<RandomPoint>> finite_sets;

  /// Sections of the finite set that governs `atom`.
  std::vector<Vec> points_at(std::size_t atom) const;
  std::size_t max_set_size() const;
};

struct NetOptions {
  /// Per-atom cap on the polytope search set; larger requests are Unsupported.
  double search_budget = 20000;
};

/// Greedy farthest-point construction with per-atom stopping; pieces are the
/// events where the construction stops at the same stage, in stage order.
///
/// Sigma hulls are handled exactly (the supremum over the hull is a maximum
/// over generators). Polytopes search a projected lattice of spacing eps/4
/// whose covering radius r is subtracted from the stopping threshold, so the
/// result covers the whole section, not just the search points.
/// Balls are Unsupported.
NetCertificate build_net(const SetSpec& set, const RandomScalar& eps, const NetOptions& options = {});

struct NetCheck {
  std::size_t samples = 0;
  std::size_t violations = 0;     // samples failing at one atom or more
  double worst_margin = 0.0;      // min over samples and atoms of eps - d
  std::vector<std::size_t> violating_atoms;
  bool passed() const noexcept { return violations == 0; }
};

NetCheck verify_net(const SetSpec& set, const NetCertificate& cert, std::size_t samples, std::uint64_t seed);

RandomIndex ess_least_index(std::span<const RandomIndex> family);

/// x_{n} glued along the index: the section at atom w is seq[n(w) - 1](w).
RandomPoint subsequence_term(std::span<const RandomPoint> seq, const RandomIndex& n);

/// Greedy per atom: n_k is the smallest index above n_{k-1} with
/// |x_{n_k} - target| < rates[k]. Throws PrefixExhausted naming the atoms
/// where the prefix ran out.
std::vector<RandomIndex> extract_random_subsequence(std::span<const RandomPoint> seq, const RandomPoint& target,
                                                    std::span<const RandomScalar> rates);

/// Atom-wise convex hull of the generators, as a polytope.
AtomwisePolytope hull_polytope(const FiniteSigmaHull& hull);

/// Net for the L0-convex hull: build_net(G, eps/2) followed by a weight grid
/// of resolution N per piece fine enough to cover each piece's hull within eps/2.
NetCertificate convex_hull_net(const FiniteSigmaHull& hull, const RandomScalar& eps,
                               std::size_t grid_budget = 200000);

}  // namespace l0kit
