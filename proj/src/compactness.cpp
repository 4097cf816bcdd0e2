#include "l0kit/compactness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "l0kit/classical/polytope.hpp"

namespace l0kit {

RandomIndex::RandomIndex(SpacePtr space, std::vector<std::size_t> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_->size()) throw Error(Errc::BadValue, "random index needs one value per atom");
  for (std::size_t a = 0; a < values_.size(); ++a)
    if (values_[a] < 1) throw Error(Errc::BadValue, "random index entries start at 1", {a});
}

std::vector<Vec> NetCertificate::points_at(std::size_t atom) const {
  const auto& set = finite_sets.at(partition.label(atom));
  std::vector<Vec> out;
  out.reserve(set.size());
  for (const auto& p : set) out.push_back(p[atom]);
  return out;
}

std::size_t NetCertificate::max_set_size() const {
  std::size_t m = 0;
  for (const auto& s : finite_sets) m = std::max(m, s.size());
  return m;
}

namespace {

void require_positive(const RandomScalar& eps, const SpacePtr& space) {
  require_same_space(eps.space(), space);
  std::vector<std::size_t> bad;
  for (std::size_t a = 0; a < eps.size(); ++a)
    if (!(eps[a] > 0.0)) bad.push_back(a);
  if (!bad.empty()) throw Error(Errc::BadEpsilon, "epsilon must be positive at every atom", bad);
}

// Farthest-point order on one atom's search set, starting at entry 0 and
// stopping once every entry is closer than `threshold` to the chosen ones.
std::vector<std::size_t> greedy_cover(const std::vector<Vec>& search, double threshold) {
  std::vector<std::size_t> chosen{0};
  std::vector<double> gap(search.size());
  for (std::size_t i = 0; i < search.size(); ++i) gap[i] = classical::distance(search[i], search[0]);
  while (true) {
    std::size_t far = 0;
    for (std::size_t i = 1; i < search.size(); ++i)
      if (gap[i] > gap[far]) far = i;
    if (gap[far] < threshold) return chosen;
    chosen.push_back(far);
    for (std::size_t i = 0; i < search.size(); ++i)
      gap[i] = std::min(gap[i], classical::distance(search[i], search[far]));
  }
}

// Stage-indexed certificate from per-atom point sequences.
NetCertificate assemble(const SpacePtr& space, std::size_t dim, const RandomScalar& eps,
                        const std::vector<std::vector<Vec>>& sequences) {
  const std::size_t n = space->size();
  std::map<std::size_t, std::size_t> stage_label;
  for (const auto& s : sequences) stage_label.emplace(s.size(), 0);
  std::size_t next = 0;
  for (auto& [stage, label] : stage_label) label = next++;

  std::vector<std::size_t> labels(n);
  for (std::size_t a = 0; a < n; ++a) labels[a] = stage_label.at(sequences[a].size());

  std::vector<std::vector<RandomPoint>> sets;
  for (const auto& [stage, label] : stage_label) {
    std::vector<RandomPoint> set;
    for (std::size_t k = 0; k < stage; ++k) {
      std::vector<Vec> sec(n);
      for (std::size_t a = 0; a < n; ++a) sec[a] = k < sequences[a].size() ? sequences[a][k] : sequences[a][0];
      set.emplace_back(space, dim, std::move(sec));
    }
    sets.push_back(std::move(set));
  }
  return {eps, MeasurablePartition(space, std::move(labels)), std::move(sets)};
}

}  // namespace

NetCertificate build_net(const SetSpec& set, const RandomScalar& eps, const NetOptions& options) {
  const SpacePtr& space = spec_space(set);
  require_positive(eps, space);
  const std::size_t n = space->size();
  const std::size_t dim = spec_dim(set);
  std::vector<std::vector<Vec>> sequences(n);

  if (const auto* hull = std::get_if<FiniteSigmaHull>(&set)) {
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<Vec> search;
      for (const auto& g : hull->generators()) search.push_back(g[a]);
      for (std::size_t i : greedy_cover(search, eps[a])) sequences[a].push_back(search[i]);
    }
  } else if (const auto* poly = std::get_if<AtomwisePolytope>(&set)) {
    std::vector<std::size_t> over;
    for (std::size_t a = 0; a < n; ++a)
      if (classical::LatticeCover::site_count(poly->vertices(a), eps[a] / 4.0) > options.search_budget)
        over.push_back(a);
    if (!over.empty()) throw Error(Errc::Unsupported, "polytope search set exceeds the budget", over);
    for (std::size_t a = 0; a < n; ++a) {
      classical::LatticeCover cover(poly->vertices(a), eps[a] / 4.0);
      const double threshold = eps[a] - cover.covering_radius();
      if (!(threshold > 0.0)) throw Error(Errc::Unsupported, "dimension too high for the lattice search", {a});
      const std::vector<Vec> search = cover.enumerate();
      for (std::size_t i : greedy_cover(search, threshold)) sequences[a].push_back(search[i]);
    }
  } else {
    throw Error(Errc::Unsupported, "nets of random balls are not constructed");
  }
  return assemble(space, dim, eps, sequences);
}

NetCheck verify_net(const SetSpec& set, const NetCertificate& cert, std::size_t samples, std::uint64_t seed) {
  const SpacePtr& space = spec_space(set);
  require_same_space(space, cert.partition.space());
  NetCheck report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  std::vector<bool> bad_atom(space->size(), false);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const RandomPoint x = sample_point(set, rng);
    bool failed = false;
    for (std::size_t piece = 0; piece < cert.finite_sets.size(); ++piece) {
      const auto dist = distance_to_finite_set(x, cert.finite_sets[piece]);
      const Event on = cert.partition.piece(piece);
      for (std::size_t a : on.atoms()) {
        const double margin = cert.epsilon[a] - dist.distance[a];
        report.worst_margin = std::min(report.worst_margin, margin);
        if (!(dist.distance[a] < cert.epsilon[a])) {
          failed = true;
          bad_atom[a] = true;
        }
      }
    }
    ++report.samples;
    if (failed) ++report.violations;
  }
  for (std::size_t a = 0; a < bad_atom.size(); ++a)
    if (bad_atom[a]) report.violating_atoms.push_back(a);
  if (report.samples == 0) report.worst_margin = 0.0;
  return report;
}

RandomIndex ess_least_index(std::span<const RandomIndex> family) {
  if (family.empty()) throw Error(Errc::EmptyFamily, "ess_least_index of an empty family");
  std::vector<std::size_t> out = family.front().values();
  for (const auto& idx : family.subspan(1)) {
    require_same_space(family.front().space(), idx.space());
    for (std::size_t a = 0; a < out.size(); ++a) out[a] = std::min(out[a], idx[a]);
  }
  return RandomIndex(family.front().space(), std::move(out));
}

RandomPoint subsequence_term(std::span<const RandomPoint> seq, const RandomIndex& n) {
  if (seq.empty()) throw Error(Errc::EmptyFamily, "empty sequence");
  std::vector<Vec> out(n.values().size());
  for (std::size_t a = 0; a < out.size(); ++a) {
    if (n[a] > seq.size()) throw Error(Errc::PrefixExhausted, "index beyond the sequence prefix", {a});
    out[a] = seq[n[a] - 1][a];
  }
  return RandomPoint(seq.front().space(), seq.front().dim(), std::move(out));
}

std::vector<RandomIndex> extract_random_subsequence(std::span<const RandomPoint> seq, const RandomPoint& target,
                                                    std::span<const RandomScalar> rates) {
  const SpacePtr& space = target.space();
  for (const auto& x : seq) require_same_shape(target, x);
  for (std::size_t k = 0; k < rates.size(); ++k) {
    require_positive(rates[k], space);
    if (k > 0)
      for (std::size_t a = 0; a < space->size(); ++a)
        if (rates[k][a] > rates[k - 1][a]) throw Error(Errc::BadValue, "rates must be nonincreasing", {a});
  }
  const std::size_t n = space->size();
  std::vector<std::vector<std::size_t>> idx(rates.size(), std::vector<std::size_t>(n));
  std::vector<std::size_t> exhausted;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t prev = 0;  // 1-based, 0 = none yet
    for (std::size_t k = 0; k < rates.size(); ++k) {
      std::size_t l = prev + 1;
      while (l <= seq.size() && !(classical::distance(seq[l - 1][a], target[a]) < rates[k][a])) ++l;
      if (l > seq.size()) {
        exhausted.push_back(a);
        break;
      }
      idx[k][a] = prev = l;
    }
  }
  if (!exhausted.empty()) throw Error(Errc::PrefixExhausted, "sequence prefix too short for the rates", exhausted);
  std::vector<RandomIndex> out;
  out.reserve(rates.size());
  for (auto& v : idx) out.emplace_back(space, std::move(v));
  return out;
}

AtomwisePolytope hull_polytope(const FiniteSigmaHull& hull) {
  const std::size_t n = hull.space()->size();
  std::vector<std::vector<Vec>> verts(n);
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& g : hull.generators()) verts[a].push_back(g[a]);
  return AtomwisePolytope(hull.space(), hull.dim(), std::move(verts));
}

namespace {

double binomial(double n, double k) {
  double r = 1.0;
  for (double i = 1.0; i <= k; i += 1.0) r = r * (n - k + i) / i;
  return r;
}

// Compositions of `total` into `parts` nonnegative integers, lexicographic.
template <class Visit>
void compositions(std::vector<std::size_t>& k, std::size_t i, std::size_t remaining, Visit& visit) {
  if (i + 1 == k.size()) {
    k[i] = remaining;
    visit(k);
    return;
  }
  for (std::size_t v = 0; v <= remaining; ++v) {
    k[i] = v;
    compositions(k, i + 1, remaining - v, visit);
  }
}

template <class Visit>
void for_each_composition(std::size_t total, std::size_t parts, Visit visit) {
  std::vector<std::size_t> k(parts, 0);
  compositions(k, 0, total, visit);
}

}  // namespace

NetCertificate convex_hull_net(const FiniteSigmaHull& hull, const RandomScalar& eps, std::size_t grid_budget) {
  require_positive(eps, hull.space());
  const RandomScalar half = 0.5 * eps;
  NetCertificate base = build_net(SetSpec(hull), half);
  const SpacePtr& space = hull.space();
  const std::size_t dim = hull.dim();

  std::vector<std::vector<RandomPoint>> sets;
  for (std::size_t piece = 0; piece < base.finite_sets.size(); ++piece) {
    const auto& gens = base.finite_sets[piece];
    const std::size_t m = gens.size();
    std::size_t resolution = 1;
    if (m > 1) {
      // rounding weights to the 1/N grid moves a combination by at most
      // (m / 2N) * diameter, which must stay below eps/2
      const Event on = base.partition.piece(piece);
      for (std::size_t a : on.atoms()) {
        double diam = 0.0;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = i + 1; j < m; ++j) diam = std::max(diam, classical::distance(gens[i][a], gens[j][a]));
        const double need = std::floor(static_cast<double>(m) * diam / eps[a]) + 1.0;
        if (need > static_cast<double>(grid_budget)) throw Error(Errc::Unsupported, "hull grid exceeds the budget", {a});
        resolution = std::max(resolution, static_cast<std::size_t>(need));
      }
    }
    if (binomial(static_cast<double>(resolution + m - 1), static_cast<double>(m - 1)) > static_cast<double>(grid_budget))
      throw Error(Errc::Unsupported, "hull grid exceeds the budget", base.partition.piece(piece).atoms());

    std::vector<RandomPoint> set;
    for_each_composition(resolution, m, [&](const std::vector<std::size_t>& k) {
      std::vector<Vec> sec(space->size(), Vec(dim, 0.0));
      for (std::size_t a = 0; a < space->size(); ++a)
        for (std::size_t i = 0; i < m; ++i) {
          if (k[i] == 0) continue;
          const double w = static_cast<double>(k[i]) / static_cast<double>(resolution);
          for (std::size_t c = 0; c < dim; ++c) sec[a][c] += w * gens[i][a][c];
        }
      set.emplace_back(space, dim, std::move(sec));
    });
    sets.push_back(std::move(set));
  }
  return {eps, base.partition, std::move(sets)};
}

}  // namespace l0kit
