#include <doctest.h>

#include <cmath>

#include "l0kit/classical/polytope.hpp"
#include "l0kit/oracle.hpp"

using namespace l0kit;

namespace {

const std::vector<Vec> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

AtomMap rotation(double angle, double scale, Vec c) {
  return [=](VecView x) {
    const double u = x[0] - c[0], v = x[1] - c[1];
    return Vec{c[0] + scale * (std::cos(angle) * u - std::sin(angle) * v),
               c[1] + scale * (std::sin(angle) * u + std::cos(angle) * v)};
  };
}

std::vector<double> atom_schedule(const std::vector<RandomScalar>& sched, std::size_t atom) {
  std::vector<double> out;
  for (const auto& e : sched) out.push_back(e[atom]);
  return out;
}

}  // namespace

TEST_CASE("greedy subset keeps separation and coverage") {
  classical::LatticeCover cover(kSquare, 0.05);
  const auto search = cover.enumerate();
  const auto net = oracle::greedy_subset(search, 0.2);
  CHECK(net.front() == search.front());
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = i + 1; j < net.size(); ++j) CHECK(classical::distance(net[i], net[j]) >= 0.2);
  for (const Vec& p : search) {
    double best = INFINITY;
    for (const Vec& q : net) best = std::min(best, classical::distance(p, q));
    CHECK(best < 0.2);
  }
}

TEST_CASE("one atom: module solvers match the classical pipeline bit for bit") {
  auto s = make_space({1.0});
  const SetSpec dom = AtomwisePolytope::uniform(s, kSquare);
  const auto T = rotation(0.8, 0.6, {0.4, 0.55});
  SUBCASE("approximation stage") {
    auto rep = solve_schauder_approx(StableMapping::uniform(s, 2, T), dom, RandomScalar::constant(s, 0.01));
    auto ans = oracle::approx_atom(T, kSquare, 0.01, {});
    CHECK(rep.point[0] == ans.point);
    CHECK(rep.residual[0] == ans.residual);
  }
  SUBCASE("schedule") {
    const auto sched = geometric_schedule(s, 0.1, 0.1, 6);
    auto rep = solve_schauder(StableMapping::uniform(s, 2, T), dom, sched, 1e-6);
    auto ans = oracle::schauder_atom(T, kSquare, atom_schedule(sched, 0), 1e-6, {});
    CHECK(rep.point[0] == ans.point);
    CHECK(rep.residual[0] == ans.residual);
    CHECK(rep.stages.size() == ans.stage + 1);
  }
  SUBCASE("random operator") {
    const std::vector<Vec> X{{0, 0}, {2, 0}, {0, 2}};
    const auto op = rotation(-0.4, 0.3, {0.5, 0.5});
    const auto sched = geometric_schedule(s, 0.1, 0.1, 6);
    auto rep = solve_random_operator(s, {op}, X, sched, 1e-6);
    auto ans = oracle::schauder_atom(op, X, atom_schedule(sched, 0), 1e-6, {});
    CHECK(rep.point[0] == ans.point);
  }
  SUBCASE("splitting") {
    const std::vector<Vec> box{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    const SetSpec bdom = AtomwisePolytope::uniform(s, box);
    // |S x| + |T y| <= 0.36 + 0.61 keeps the sum inside the box
    AtomMap S = [](VecView x) { return Vec{0.25 * x[1], -0.25 * x[0]}; };
    const auto Tm = rotation(1.0, 0.3, {0.1, 0.1});
    const auto sched = geometric_schedule(s, 0.1, 0.1, 6);
    ContractionSpec spec(StableMapping::uniform(s, 2, S), RandomScalar::constant(s, 0.25));
    auto rep = solve_krasnoselskii(spec, StableMapping::uniform(s, 2, Tm), bdom, sched, 1e-6);
    auto ans = oracle::krasnoselskii_atom(S, 0.25, Tm, box, atom_schedule(sched, 0), 1e-6, {});
    CHECK(rep.point[0] == ans.point);
    CHECK(rep.residual[0] == ans.residual);
  }
  SUBCASE("contraction") {
    AtomMap S = [](VecView x) { return Vec{0.5 * x[0], 0.25 * x[1]}; };
    ContractionSpec spec(StableMapping::uniform(s, 2, S), RandomScalar::constant(s, 0.5));
    auto rep = solve_contraction(spec, RandomPoint::constant(s, {1, 1}), RandomPoint::zero(s, 2),
                                 RandomScalar::constant(s, 1e-10));
    auto ans = oracle::contraction_atom(S, 0.5, Vec{1, 1}, Vec{0, 0}, 1e-10, 100000);
    CHECK(rep.point[0] == ans.point);
    CHECK(rep.iterations[0] == ans.iterations);
  }
}

TEST_CASE("multi-atom contractions agree with the per-atom pipeline") {
  auto s = make_space({0.2, 0.3, 0.5});
  std::vector<AtomMap> maps;
  std::vector<double> alphas{0.1, 0.6, 0.85};
  for (double a : alphas) maps.push_back([a](VecView x) { return Vec{a * x[0]}; });
  ContractionSpec spec(StableMapping(s, 1, maps), RandomScalar(s, alphas));
  const double tol = 1e-10;
  auto rep = solve_contraction(spec, RandomPoint::constant(s, {1.0}), RandomPoint::zero(s, 1),
                               RandomScalar::constant(s, tol));
  for (std::size_t a = 0; a < 3; ++a) {
    auto ans = oracle::contraction_atom(maps[a], alphas[a], Vec{1.0}, Vec{0.0}, tol, 100000);
    CHECK(std::fabs(rep.point[a][0] - ans.point[0]) <= 10 * tol);
    CHECK(std::fabs(ans.point[0] - 1.0 / (1.0 - alphas[a])) <= 1e-8);
  }
}

TEST_CASE("oracle errors") {
  CHECK_THROWS_AS(oracle::approx_atom(rotation(0.5, 0.9, {0.5, 0.5}), kSquare, 0.1, {}), Error);
  CHECK_THROWS_AS(oracle::approx_atom(rotation(0.5, 0.5, {0.5, 0.5}), kSquare, 0.0, {}), Error);
  CHECK_THROWS_AS(oracle::contraction_atom([](VecView x) { return Vec{x[0]}; }, 1.0, Vec{0}, Vec{0}, 1e-9, 10),
                  Error);
  try {
    oracle::contraction_atom([](VecView x) { return Vec{0.99 * x[0]}; }, 0.99, Vec{1}, Vec{0}, 1e-12, 5);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoConvergence);
  }
}
