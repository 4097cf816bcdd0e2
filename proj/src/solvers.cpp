#include "l0kit/solvers.hpp"

#include <cmath>
#include <limits>

#include "l0kit/classical/brouwer.hpp"
#include "l0kit/classical/polytope.hpp"

namespace l0kit {

// ---------------------------------------------------------------- mappings

StableMapping::StableMapping(SpacePtr space, std::size_t dim, std::vector<AtomMap> maps)
    : space_(std::move(space)), dim_(dim), maps_(std::move(maps)) {
  if (!space_) throw Error(Errc::BadValue, "mapping without a space");
  if (dim_ == 0) throw Error(Errc::DimMismatch, "dimension must be positive");
  if (maps_.size() != space_->size()) throw Error(Errc::BadValue, "mapping needs one section map per atom");
  for (std::size_t a = 0; a < maps_.size(); ++a)
    if (!maps_[a]) throw Error(Errc::BadValue, "empty section map", {a});
}

StableMapping StableMapping::uniform(SpacePtr space, std::size_t dim, AtomMap map) {
  const std::size_t n = space->size();
  return StableMapping(std::move(space), dim, std::vector<AtomMap>(n, std::move(map)));
}

Vec StableMapping::apply(std::size_t atom, VecView x) const {
  Vec y = maps_.at(atom)(x);
  if (y.size() != dim_) throw Error(Errc::DimMismatch, "section map changed the dimension", {atom});
  for (double v : y)
    if (!std::isfinite(v)) throw Error(Errc::BadValue, "section map produced a non-finite value", {atom});
  return y;
}

RandomPoint StableMapping::operator()(const RandomPoint& x) const {
  require_same_space(space_, x.space());
  if (x.dim() != dim_) throw Error(Errc::DimMismatch, "point dimension differs from the mapping");
  std::vector<Vec> out(x.size());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = apply(a, x[a]);
  return RandomPoint(space_, dim_, std::move(out));
}

namespace {

MeasurablePartition random_partition(const SpacePtr& space, Rng& rng) {
  const std::size_t n = space->size();
  std::uniform_int_distribution<std::size_t> count(1, n);
  const std::size_t pieces = count(rng);
  std::uniform_int_distribution<std::size_t> pick(0, pieces - 1);
  std::vector<std::size_t> raw(n);
  for (auto& l : raw) l = pick(rng);
  // compact to contiguous labels, keeping the drawn order
  std::vector<std::size_t> rank(pieces, n);
  std::size_t next = 0;
  for (auto l : raw)
    if (rank[l] == n) rank[l] = next++;
  for (auto& l : raw) l = rank[l];
  return MeasurablePartition(space, std::move(raw));
}

}  // namespace

SigmaStabilityReport check_sigma_stability(const WholeMap& map, const SetSpec& domain, std::size_t trials,
                                           std::uint64_t seed) {
  SigmaStabilityReport report;
  const SpacePtr& space = spec_space(domain);
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const MeasurablePartition part = random_partition(space, rng);
    std::vector<RandomPoint> pieces;
    for (std::size_t k = 0; k < part.piece_count(); ++k) pieces.push_back(sample_point(domain, rng));
    const RandomPoint lhs = map(glue_points(part, pieces));
    std::vector<RandomPoint> images;
    for (const auto& p : pieces) images.push_back(map(p));
    const RandomPoint rhs = glue_points(part, images);
    require_same_shape(lhs, rhs);
    bool failed = false;
    for (std::size_t a = 0; a < lhs.size(); ++a) {
      double dev = 0.0;
      for (std::size_t i = 0; i < lhs.dim(); ++i) dev = std::max(dev, std::fabs(lhs[a][i] - rhs[a][i]));
      report.worst_deviation = std::max(report.worst_deviation, dev);
      if (dev > 1e-12) {
        if (!report.witness) report.witness = SigmaStabilityReport::Witness{part.labels(), a, dev};
        failed = true;
      }
    }
    ++report.trials;
    if (failed) ++report.failures;
  }
  return report;
}

SigmaStabilityReport check_sigma_stability(const StableMapping& map, const SetSpec& domain, std::size_t trials,
                                           std::uint64_t seed) {
  return check_sigma_stability(WholeMap([&map](const RandomPoint& x) { return map(x); }), domain, trials, seed);
}

ContractionSpec::ContractionSpec(StableMapping s, RandomScalar a) : S(std::move(s)), alpha(std::move(a)) {
  require_same_space(S.space(), alpha.space());
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (!(alpha[i] >= 0.0 && alpha[i] < 1.0)) bad.push_back(i);
  if (!bad.empty()) throw Error(Errc::BadValue, "contraction constant must lie in [0, 1)", bad);
}

LipschitzReport check_lipschitz(const ContractionSpec& spec, const SetSpec& domain, std::size_t pairs,
                                std::uint64_t seed) {
  LipschitzReport report;
  Rng rng(seed);
  std::vector<bool> bad(spec.S.space()->size(), false);
  for (std::size_t t = 0; t < pairs; ++t) {
    const RandomPoint x = sample_point(domain, rng);
    const RandomPoint y = sample_point(domain, rng);
    for (std::size_t a = 0; a < x.size(); ++a) {
      const double dxy = classical::distance(x[a], y[a]);
      const double dS = classical::distance(spec.S.apply(a, x[a]), spec.S.apply(a, y[a]));
      if (dxy > 0.0) report.worst_ratio = std::max(report.worst_ratio, dS / dxy);
      if (dS > spec.alpha[a] * dxy + 1e-12 * (1.0 + dxy)) bad[a] = true;
    }
    ++report.pairs;
  }
  for (std::size_t a = 0; a < bad.size(); ++a)
    if (bad[a]) report.violating_atoms.push_back(a);
  return report;
}

// ---------------------------------------------------------------- reports

bool FixedPointReport::bounds_hold() const {
  for (std::size_t a = 0; a < residual.size(); ++a) {
    const bool ok = strict ? residual[a] < bound[a] : residual[a] <= bound[a];
    if (!ok) return false;
  }
  return true;
}

NoConvergenceError::NoConvergenceError(const std::string& what, FixedPointReport partial,
                                       std::vector<std::size_t> atoms)
    : Error(Errc::NoConvergence, what, std::move(atoms), partial.residual.max()), partial_(std::move(partial)) {}

namespace {

RandomScalar residual_of(const StableMapping& T, const RandomPoint& x) {
  std::vector<double> r(x.size());
  for (std::size_t a = 0; a < r.size(); ++a) r[a] = classical::distance(T.apply(a, x[a]), x[a]);
  return RandomScalar(x.space(), std::move(r));
}

struct AtomIteration {
  Vec x;
  std::size_t iterations = 0;
  bool converged = false;
};

AtomIteration iterate_contraction(const StableMapping& S, std::size_t atom, double alpha, const Vec& shift, Vec x,
                                  double tol, std::size_t max_iter) {
  const double stop = alpha > 0.0 ? tol * (1.0 - alpha) / alpha : std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= max_iter; ++k) {
    Vec next = S.apply(atom, x);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] += shift[i];
    const double step = classical::distance(next, x);
    x = std::move(next);
    if (step <= stop) return {std::move(x), k, true};
  }
  return {std::move(x), max_iter, false};
}

void require_positive(const RandomScalar& eps, const char* what) {
  std::vector<std::size_t> bad;
  for (std::size_t a = 0; a < eps.size(); ++a)
    if (!(eps[a] > 0.0)) bad.push_back(a);
  if (!bad.empty()) throw Error(Errc::BadEpsilon, what, bad);
}

const AtomwisePolytope& require_polytope(const SetSpec& domain) {
  const auto* poly = std::get_if<AtomwisePolytope>(&domain);
  if (!poly) throw Error(Errc::Unsupported, "fixed-point solvers need an atom-wise polytope domain");
  return *poly;
}

void check_self_map(const StableMapping& T, const AtomwisePolytope& poly, std::size_t samples, std::uint64_t seed) {
  require_same_space(T.space(), poly.space());
  if (T.dim() != poly.dim()) throw Error(Errc::DimMismatch, "mapping and domain differ in dimension");
  const std::size_t n = poly.space()->size();
  std::vector<bool> bad(n, false);
  auto probe = [&](std::size_t a, VecView x) {
    const Vec y = T.apply(a, x);
    if (classical::distance_to_polytope(poly.vertices(a), y) > classical::self_map_slack(poly.vertices(a)))
      bad[a] = true;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (const Vec& v : poly.vertices(a)) probe(a, v);
  Rng rng(seed);
  const SetSpec spec(poly);
  for (std::size_t s = 0; s < samples; ++s) {
    const RandomPoint x = sample_point(spec, rng);
    for (std::size_t a = 0; a < n; ++a) probe(a, x[a]);
  }
  std::vector<std::size_t> atoms;
  for (std::size_t a = 0; a < n; ++a)
    if (bad[a]) atoms.push_back(a);
  if (!atoms.empty()) throw Error(Errc::NotSelfMap, "mapping leaves the domain", atoms);
}

// The finite net used on one atom: explicit points or an implicit lattice.
struct AtomNet {
  std::vector<Vec> points;
  std::optional<classical::LatticeCover> lattice;

  std::optional<Vec> project(VecView z, double eps) const {
    return lattice ? classical::schauder_combination(*lattice, eps, z)
                   : classical::schauder_combination(points, eps, z);
  }
};

Error at_atom(const Error& e, std::size_t atom) {
  return Error(e.code(), e.message() + " (atom " + std::to_string(atom) + ")", {atom}, e.residual());
}

}  // namespace

// ---------------------------------------------------------------- contraction

FixedPointReport solve_contraction(const ContractionSpec& spec, const RandomPoint& shift, const RandomPoint& x0,
                                   const RandomScalar& tol, std::size_t max_iter) {
  require_same_space(spec.S.space(), shift.space());
  require_same_shape(shift, x0);
  require_same_space(shift.space(), tol.space());
  if (shift.dim() != spec.S.dim()) throw Error(Errc::DimMismatch, "shift dimension differs from the mapping");
  require_positive(tol, "tolerance must be positive at every atom");

  const std::size_t n = shift.size();
  std::vector<Vec> pts(n);
  std::vector<std::size_t> iters(n);
  std::vector<std::size_t> stuck;
  for (std::size_t a = 0; a < n; ++a) {
    auto it = iterate_contraction(spec.S, a, spec.alpha[a], shift[a], x0[a], tol[a], max_iter);
    pts[a] = std::move(it.x);
    iters[a] = it.iterations;
    if (!it.converged) stuck.push_back(a);
  }
  RandomPoint x(shift.space(), shift.dim(), std::move(pts));
  std::vector<double> r(n);
  for (std::size_t a = 0; a < n; ++a) {
    Vec next = spec.S.apply(a, x[a]);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] += shift[a][i];
    r[a] = classical::distance(next, x[a]);
  }
  FixedPointReport report{x, RandomScalar(x.space(), std::move(r)), tol, false, std::move(iters), {}, {}, {}};
  if (!stuck.empty()) throw NoConvergenceError("contraction iteration hit max_iter", std::move(report), stuck);
  return report;
}

// ---------------------------------------------------------------- Schauder

FixedPointReport solve_schauder_approx(const StableMapping& T, const SetSpec& domain, const RandomScalar& eps,
                                       const SchauderOptions& options, const std::optional<RandomPoint>& warm_start) {
  const AtomwisePolytope& poly = require_polytope(domain);
  require_same_space(poly.space(), eps.space());
  require_positive(eps, "epsilon must be positive at every atom");
  if (warm_start) require_same_space(poly.space(), warm_start->space());
  check_self_map(T, poly, options.self_map_samples, options.seed);

  const std::size_t n = poly.space()->size();
  const std::size_t d = poly.dim();
  bool explicit_net = true;
  for (std::size_t a = 0; a < n; ++a)
    if (classical::LatticeCover::site_count(poly.vertices(a), eps[a] / 4.0) > options.net_budget)
      explicit_net = false;

  StageRecord stage;
  stage.eps_max = eps.max();
  stage.eps_min = eps.min();
  std::optional<NetCertificate> cert;
  std::vector<AtomNet> nets(n);
  if (explicit_net) {
    NetOptions no;
    no.search_budget = options.net_budget;
    cert = build_net(domain, eps, no);
    for (std::size_t a = 0; a < n; ++a) nets[a].points = cert->points_at(a);
    stage.net_kind = "greedy";
    stage.net_pieces = cert->finite_sets.size();
    stage.net_points = cert->max_set_size();
  } else {
    // spacing eps / (2 sqrt d) puts every point of the section within eps/4 of the net
    for (std::size_t a = 0; a < n; ++a) {
      nets[a].lattice.emplace(poly.vertices(a), eps[a] / (2.0 * std::sqrt(static_cast<double>(d))));
      stage.net_points = std::max(stage.net_points, static_cast<std::size_t>(nets[a].lattice->site_count()));
    }
    stage.net_kind = "lattice";
    stage.net_pieces = 1;
  }

  std::vector<Vec> pts(n);
  for (std::size_t a = 0; a < n; ++a) {
    const AtomNet& net = nets[a];
    const double e = eps[a];
    classical::AtomMap f = [&](VecView y) -> Vec {
      auto p = net.project(T.apply(a, y), e);
      if (!p) throw Error(Errc::NotSelfMap, "image outside the net enlargement", {a});
      return std::move(*p);
    };
    classical::BrouwerOptions bo;
    bo.tol = 0.25 * e;
    bo.max_iter = options.brouwer_max_iter;
    if (warm_start) bo.seeds = {(*warm_start)[a]};
    bool done = false;
    for (int attempt = 0; attempt <= options.retries && !done; ++attempt) {
      classical::BrouwerResult res;
      try {
        res = classical::solve_brouwer_atom(f, poly.vertices(a), bo);
      } catch (const Error& err) {
        throw at_atom(err, a);
      }
      stage.evaluations += res.evaluations;
      const Vec ty = T.apply(a, res.point);
      const auto py = net.project(ty, e);
      // the projection moves T(y) by less than eps; a fixed point of P o T inherits it
      if (!py || !(classical::distance(ty, *py) < e))
        throw Error(Errc::CertificateViolation, "projection bound failed at a Brouwer point", {a});
      pts[a] = res.point;
      done = classical::distance(ty, res.point) < e;
      bo.tol /= 16.0;
      bo.seeds = {res.point};
    }
    if (!done) throw Error(Errc::CertificateViolation, "a-posteriori residual check failed", {a});
  }

  RandomPoint x(poly.space(), d, std::move(pts));
  RandomScalar r = residual_of(T, x);
  for (std::size_t a = 0; a < n; ++a)
    if (!(r[a] < eps[a])) throw Error(Errc::CertificateViolation, "a-posteriori residual check failed", {a});
  stage.residual_max = r.max();
  FixedPointReport report{std::move(x), std::move(r), eps, true, {stage.evaluations}, {stage}, std::move(cert), {}};
  return report;
}

std::vector<RandomScalar> harmonic_schedule(const SpacePtr& space, std::size_t K) {
  std::vector<RandomScalar> out;
  for (std::size_t k = 1; k <= K; ++k) out.push_back(RandomScalar::constant(space, 1.0 / static_cast<double>(k)));
  return out;
}

std::vector<RandomScalar> geometric_schedule(const SpacePtr& space, double start, double ratio, std::size_t count) {
  std::vector<RandomScalar> out;
  double e = start;
  for (std::size_t k = 0; k < count; ++k, e *= ratio) out.push_back(RandomScalar::constant(space, e));
  return out;
}

FixedPointReport solve_schauder(const StableMapping& T, const SetSpec& domain,
                                const std::vector<RandomScalar>& eps_schedule, double tol,
                                const SchauderOptions& options) {
  if (eps_schedule.empty()) throw Error(Errc::EmptyFamily, "empty epsilon schedule");
  if (!(tol > 0.0)) throw Error(Errc::BadEpsilon, "tolerance must be positive");
  std::optional<RandomPoint> prev;
  std::optional<FixedPointReport> last;
  std::vector<StageRecord> stages;
  std::vector<std::size_t> evaluations;

  for (const RandomScalar& eps : eps_schedule) {
    FixedPointReport approx = solve_schauder_approx(T, domain, eps, options, prev);
    // polish: keep T(x) wherever it is the better approximant
    const RandomPoint& x = approx.point;
    std::vector<Vec> pts(x.coords());
    for (std::size_t a = 0; a < x.size(); ++a) {
      Vec tx = T.apply(a, x[a]);
      if (classical::distance(T.apply(a, tx), tx) < approx.residual[a]) pts[a] = std::move(tx);
    }
    RandomPoint polished(x.space(), x.dim(), std::move(pts));
    approx.residual = residual_of(T, polished);
    approx.point = std::move(polished);

    StageRecord stage = approx.stages.front();
    stage.residual_max = approx.residual.max();
    if (prev) stage.step = el_quasinorm(approx.point - *prev);
    stages.push_back(stage);
    evaluations.push_back(stage.evaluations);
    approx.stages = stages;
    approx.iterations = evaluations;

    const bool small_residual = approx.residual.max() <= tol;
    const bool cauchy = stage.step && *stage.step <= tol;
    prev = approx.point;
    if (small_residual || cauchy) return approx;
    last = std::move(approx);
  }
  throw NoConvergenceError("epsilon schedule exhausted without acceptance", std::move(*last));
}

// ---------------------------------------------------------------- splitting

StableMapping resolvent_map(const ContractionSpec& S, const StableMapping& T, double inner_tol,
                            std::size_t inner_max_iter) {
  require_same_space(S.S.space(), T.space());
  if (S.S.dim() != T.dim()) throw Error(Errc::DimMismatch, "S and T differ in dimension");
  std::vector<AtomMap> maps;
  for (std::size_t a = 0; a < T.space()->size(); ++a) {
    maps.push_back([S, T, a, inner_tol, inner_max_iter](VecView y) -> Vec {
      Vec shift = T.apply(a, y);
      auto it = iterate_contraction(S.S, a, S.alpha[a], shift, shift, inner_tol, inner_max_iter);
      if (!it.converged) throw Error(Errc::NoConvergence, "inner contraction solve hit max_iter", {a});
      return std::move(it.x);
    });
  }
  return StableMapping(T.space(), T.dim(), std::move(maps));
}

FixedPointReport solve_krasnoselskii(const ContractionSpec& S, const StableMapping& T, const SetSpec& domain,
                                     const std::vector<RandomScalar>& eps_schedule, double tol,
                                     const SplittingOptions& options) {
  const AtomwisePolytope& poly = require_polytope(domain);
  require_same_space(poly.space(), T.space());
  require_same_space(poly.space(), S.S.space());
  if (eps_schedule.empty()) throw Error(Errc::EmptyFamily, "empty epsilon schedule");
  for (const auto& e : eps_schedule) require_positive(e, "epsilon must be positive at every atom");

  const std::size_t n = poly.space()->size();
  // S(x) + T(y) must stay in the domain
  {
    Rng rng(options.schauder.seed ^ 0x5eedULL);
    std::vector<bool> bad(n, false);
    auto probe = [&](const Vec& xa, const Vec& ya, std::size_t a) {
      Vec z = S.S.apply(a, xa);
      const Vec t = T.apply(a, ya);
      for (std::size_t i = 0; i < z.size(); ++i) z[i] += t[i];
      if (classical::distance_to_polytope(poly.vertices(a), z) > classical::self_map_slack(poly.vertices(a)))
        bad[a] = true;
    };
    for (std::size_t a = 0; a < n; ++a)
      for (const Vec& v : poly.vertices(a))
        for (const Vec& w : poly.vertices(a)) probe(v, w, a);
    for (std::size_t s = 0; s < options.hypothesis_samples; ++s) {
      const RandomPoint x = sample_point(domain, rng);
      const RandomPoint y = sample_point(domain, rng);
      for (std::size_t a = 0; a < n; ++a) probe(x[a], y[a], a);
    }
    std::vector<std::size_t> atoms;
    for (std::size_t a = 0; a < n; ++a)
      if (bad[a]) atoms.push_back(a);
    if (!atoms.empty()) throw Error(Errc::HypothesisViolation, "S(x) + T(y) leaves the domain", atoms);
    const LipschitzReport lip = check_lipschitz(S, domain, options.hypothesis_samples, options.schauder.seed + 1);
    if (!lip.passed()) throw Error(Errc::HypothesisViolation, "S is not alpha-Lipschitz", lip.violating_atoms);
  }

  const StableMapping Tp = resolvent_map(S, T, options.inner_tol, options.inner_max_iter);
  std::vector<RandomScalar> scaled;
  for (const auto& e : eps_schedule) {
    std::vector<double> v(n);
    for (std::size_t a = 0; a < n; ++a) v[a] = e[a] / (1.0 + S.alpha[a]);
    scaled.emplace_back(e.space(), std::move(v));
  }

  auto finish = [&](FixedPointReport& rep) {
    std::vector<double> r(n);
    for (std::size_t a = 0; a < n; ++a) {
      Vec z = S.S.apply(a, rep.point[a]);
      const Vec t = T.apply(a, rep.point[a]);
      for (std::size_t i = 0; i < z.size(); ++i) z[i] += t[i];
      r[a] = classical::distance(z, rep.point[a]);
    }
    rep.residual = RandomScalar(rep.point.space(), std::move(r));
    rep.bound = eps_schedule[rep.stages.size() - 1];
    rep.strict = true;
  };
  try {
    FixedPointReport rep = solve_schauder(Tp, domain, scaled, tol, options.schauder);
    finish(rep);
    return rep;
  } catch (const NoConvergenceError& e) {
    FixedPointReport rep = e.partial();
    finish(rep);
    throw NoConvergenceError(e.message(), std::move(rep), e.atoms());
  }
}

FixedPointReport solve_random_operator(const SpacePtr& space, const std::vector<AtomMap>& ops,
                                       const std::vector<Vec>& X_vertices,
                                       const std::vector<RandomScalar>& eps_schedule, double tol,
                                       const SchauderOptions& options) {
  if (X_vertices.empty()) throw Error(Errc::EmptySection, "operator domain without vertices");
  const std::size_t d = X_vertices.front().size();
  const SetSpec domain(AtomwisePolytope::uniform(space, X_vertices));
  return solve_schauder(StableMapping(space, d, ops), domain, eps_schedule, tol, options);
}

}  // namespace l0kit
