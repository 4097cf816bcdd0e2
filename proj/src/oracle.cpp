#include "l0kit/oracle.hpp"

#include <cmath>
#include <limits>

#include "l0kit/classical/brouwer.hpp"
#include "l0kit/classical/polytope.hpp"

namespace l0kit::oracle {

namespace {

using classical::distance;

Vec eval(const AtomMap& f, VecView x) {
  Vec y = f(x);
  if (y.size() != x.size()) throw Error(Errc::DimMismatch, "map changed the dimension");
  for (double v : y)
    if (!std::isfinite(v)) throw Error(Errc::BadValue, "map produced a non-finite value");
  return y;
}

bool outside(const std::vector<Vec>& vertices, VecView y) {
  return classical::distance_to_polytope(vertices, y) > classical::self_map_slack(vertices);
}

}  // namespace

std::vector<Vec> greedy_subset(const std::vector<Vec>& search, double threshold) {
  std::vector<Vec> picked{search.front()};
  std::vector<double> gap(search.size());
  for (std::size_t i = 0; i < search.size(); ++i) gap[i] = distance(search[i], search[0]);
  for (;;) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < search.size(); ++i)
      if (gap[i] > gap[best]) best = i;
    if (gap[best] < threshold) return picked;
    picked.push_back(search[best]);
    for (std::size_t i = 0; i < search.size(); ++i) gap[i] = std::min(gap[i], distance(search[i], search[best]));
  }
}

AtomAnswer contraction_atom(const AtomMap& S, double alpha, VecView shift, VecView x0, double tol,
                            std::size_t max_iter) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(Errc::BadValue, "contraction constant outside [0, 1)");
  if (!(tol > 0.0)) throw Error(Errc::BadEpsilon, "tolerance must be positive");
  const double stop = alpha > 0.0 ? tol * (1.0 - alpha) / alpha : std::numeric_limits<double>::infinity();
  Vec x(x0.begin(), x0.end());
  for (std::size_t k = 1; k <= max_iter; ++k) {
    Vec next = eval(S, x);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] += shift[i];
    const double step = distance(next, x);
    x = std::move(next);
    if (step <= stop) {
      Vec r = eval(S, x);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] += shift[i];
      return {x, distance(r, x), k, 0};
    }
  }
  throw Error(Errc::NoConvergence, "contraction iteration hit max_iter");
}

AtomAnswer approx_atom(const AtomMap& T, const std::vector<Vec>& vertices, double eps,
                       const SchauderOptions& options, const Vec* warm_start) {
  if (!(eps > 0.0)) throw Error(Errc::BadEpsilon, "epsilon must be positive");
  {
    Rng rng(options.seed);
    for (const Vec& v : vertices)
      if (outside(vertices, eval(T, v))) throw Error(Errc::NotSelfMap, "map leaves the polytope");
    for (std::size_t s = 0; s < options.self_map_samples; ++s)
      if (outside(vertices, eval(T, sample_in_hull(vertices, rng))))
        throw Error(Errc::NotSelfMap, "map leaves the polytope");
  }

  const std::size_t d = vertices.front().size();
  std::vector<Vec> points;
  std::optional<classical::LatticeCover> lattice;
  std::size_t evaluations = 0;
  if (classical::LatticeCover::site_count(vertices, eps / 4.0) <= options.net_budget) {
    classical::LatticeCover cover(vertices, eps / 4.0);
    points = greedy_subset(cover.enumerate(), eps - cover.covering_radius());
  } else {
    lattice.emplace(vertices, eps / (2.0 * std::sqrt(static_cast<double>(d))));
  }
  auto project = [&](VecView z) {
    return lattice ? classical::schauder_combination(*lattice, eps, z) : classical::schauder_combination(points, eps, z);
  };
  AtomMap f = [&](VecView y) -> Vec {
    auto p = project(eval(T, y));
    if (!p) throw Error(Errc::NotSelfMap, "image outside the net enlargement");
    return std::move(*p);
  };

  classical::BrouwerOptions bo;
  bo.tol = 0.25 * eps;
  bo.max_iter = options.brouwer_max_iter;
  if (warm_start) bo.seeds = {*warm_start};
  for (int attempt = 0; attempt <= options.retries; ++attempt) {
    const auto res = classical::solve_brouwer_atom(f, vertices, bo);
    evaluations += res.evaluations;
    const Vec ty = eval(T, res.point);
    const auto py = project(ty);
    if (!py || !(distance(ty, *py) < eps))
      throw Error(Errc::CertificateViolation, "projection bound failed at a Brouwer point");
    const double r = distance(ty, res.point);
    if (r < eps) return {res.point, r, evaluations, 0};
    bo.tol /= 16.0;
    bo.seeds = {res.point};
  }
  throw Error(Errc::CertificateViolation, "a-posteriori residual check failed");
}

AtomAnswer schauder_atom(const AtomMap& T, const std::vector<Vec>& vertices, const std::vector<double>& schedule,
                         double tol, const SchauderOptions& options) {
  if (schedule.empty()) throw Error(Errc::EmptyFamily, "empty epsilon schedule");
  if (!(tol > 0.0)) throw Error(Errc::BadEpsilon, "tolerance must be positive");
  std::optional<Vec> prev;
  std::size_t evaluations = 0;
  AtomAnswer best;
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    AtomAnswer ans = approx_atom(T, vertices, schedule[k], options, prev ? &*prev : nullptr);
    evaluations += ans.iterations;
    Vec tx = eval(T, ans.point);
    if (distance(eval(T, tx), tx) < ans.residual) ans.point = std::move(tx);
    ans.residual = distance(eval(T, ans.point), ans.point);
    ans.iterations = evaluations;
    ans.stage = k;
    bool accept = ans.residual <= tol;
    if (prev) {
      const double step = distance(ans.point, *prev);
      accept = accept || step / (1.0 + step) <= tol;
    }
    prev = ans.point;
    best = ans;
    if (accept) return best;
  }
  throw Error(Errc::NoConvergence, "epsilon schedule exhausted without acceptance", {}, best.residual);
}

AtomAnswer krasnoselskii_atom(const AtomMap& S, double alpha, const AtomMap& T, const std::vector<Vec>& vertices,
                              const std::vector<double>& schedule, double tol, const SplittingOptions& options) {
  auto sum = [&](VecView x, VecView y) {
    Vec z = eval(S, x);
    const Vec t = eval(T, y);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += t[i];
    return z;
  };
  for (const Vec& v : vertices)
    for (const Vec& w : vertices)
      if (outside(vertices, sum(v, w))) throw Error(Errc::HypothesisViolation, "S(x) + T(y) leaves the polytope");
  Rng rng(options.schauder.seed ^ 0x5eedULL);
  for (std::size_t s = 0; s < options.hypothesis_samples; ++s) {
    const Vec x = sample_in_hull(vertices, rng);
    const Vec y = sample_in_hull(vertices, rng);
    if (outside(vertices, sum(x, y))) throw Error(Errc::HypothesisViolation, "S(x) + T(y) leaves the polytope");
  }
  for (std::size_t s = 0; s < options.hypothesis_samples; ++s) {
    const Vec x = sample_in_hull(vertices, rng);
    const Vec y = sample_in_hull(vertices, rng);
    const double dxy = distance(x, y);
    if (distance(eval(S, x), eval(S, y)) > alpha * dxy + 1e-12 * (1.0 + dxy))
      throw Error(Errc::HypothesisViolation, "S is not alpha-Lipschitz");
  }

  AtomMap resolvent = [&](VecView y) -> Vec {
    const Vec shift = eval(T, y);
    return contraction_atom(S, alpha, shift, shift, options.inner_tol, options.inner_max_iter).point;
  };
  std::vector<double> scaled;
  for (double e : schedule) scaled.push_back(e / (1.0 + alpha));
  AtomAnswer ans = schauder_atom(resolvent, vertices, scaled, tol, options.schauder);
  ans.residual = distance(sum(ans.point, ans.point), ans.point);
  return ans;
}

}  // namespace l0kit::oracle
