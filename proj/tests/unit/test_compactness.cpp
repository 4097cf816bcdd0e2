#include <doctest.h>

#include <cmath>
#include <random>

#include "l0kit/compactness.hpp"

using namespace l0kit;

namespace {

RandomPoint pt(const SpacePtr& s, std::vector<Vec> c) {
  const std::size_t d = c.front().size();
  return RandomPoint(s, d, std::move(c));
}

}  // namespace

TEST_CASE("net of a single generator") {
  auto s = make_space({1, 2});
  auto g = pt(s, {{0.1, 0.2}, {3.0, -1.0}});
  auto cert = build_net(FiniteSigmaHull({g}), RandomScalar::constant(s, 0.5));
  CHECK(cert.partition.piece_count() == 1);
  REQUIRE(cert.finite_sets.size() == 1);
  REQUIRE(cert.finite_sets[0].size() == 1);
  CHECK(cert.finite_sets[0][0] == g);
}

TEST_CASE("two generators close at one atom only") {
  auto s = make_space({1, 1});
  auto x1 = pt(s, {{0.0}, {0.0}});
  auto x2 = pt(s, {{0.5}, {3.0}});
  const SetSpec hull = FiniteSigmaHull({x1, x2});
  const auto eps = RandomScalar::constant(s, 1.0);
  auto cert = build_net(hull, eps);
  CHECK(cert.points_at(0).size() == 1);
  CHECK(cert.points_at(1).size() == 2);
  CHECK(cert.partition.label(0) != cert.partition.label(1));
  // all four gluings of the two generators are covered on their pieces
  for (int code = 0; code < 4; ++code) {
    auto y = pt(s, {(code & 1 ? x2 : x1)[0], (code & 2 ? x2 : x1)[1]});
    for (std::size_t a = 0; a < 2; ++a) {
      double best = INFINITY;
      for (const auto& p : cert.points_at(a)) best = std::min(best, classical::distance(p, y[a]));
      CHECK(best < eps[a]);
    }
  }
}

TEST_CASE("large epsilon on the unit square gives one point") {
  auto s = make_space({1, 1, 1});
  auto cert = build_net(AtomwisePolytope::uniform(s, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
                        RandomScalar::constant(s, 10.0));
  CHECK(cert.partition.piece_count() == 1);
  CHECK(cert.max_set_size() == 1);
}

TEST_CASE("build_net errors") {
  auto s = make_space({1, 1});
  const SetSpec sq = AtomwisePolytope::uniform(s, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  try {
    build_net(sq, RandomScalar(s, {0.5, 0.0}));
    FAIL("expected BadEpsilon");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadEpsilon);
    CHECK(e.atoms() == std::vector<std::size_t>{1});
  }
  try {
    build_net(sq, RandomScalar::constant(s, 1e-4));
    FAIL("expected Unsupported");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Unsupported);
  }
  const SetSpec ball = EpsilonBall(RandomBall(RandomPoint::zero(s, 2), RandomScalar::constant(s, 1.0)));
  CHECK_THROWS_AS(build_net(ball, RandomScalar::constant(s, 0.5)), Error);
}

TEST_CASE("verify_net detects shrunk certificates") {
  auto s = make_space({1, 3});
  const SetSpec sq = AtomwisePolytope(s, 2, {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 0}, {2, 0}, {0, 2}}});
  auto cert = build_net(sq, RandomScalar::constant(s, 0.5));
  auto good = verify_net(sq, cert, 10000, 1);
  CHECK(good.passed());
  CHECK(good.samples == 10000);
  CHECK(good.worst_margin > 0.0);
  auto shrunk = cert;
  shrunk.epsilon = RandomScalar::constant(s, 0.05);
  auto badcheck = verify_net(sq, shrunk, 2000, 1);
  CHECK_FALSE(badcheck.passed());
  CHECK(badcheck.violating_atoms == std::vector<std::size_t>{0, 1});
  CHECK(verify_net(sq, shrunk, 0, 1).passed());
}

TEST_CASE("identical sections give a single piece") {
  // the vertex list is itself a 0.3-net of a compact set
  auto s = make_space({1, 1, 1, 1});
  std::vector<Vec> grid;
  for (int i = 0; i <= 4; ++i) grid.push_back({0.25 * i});
  auto cert = build_net(AtomwisePolytope::uniform(s, grid), RandomScalar::constant(s, 0.3));
  CHECK(cert.partition.piece_count() == 1);
}

TEST_CASE("ess_least_index") {
  auto s = make_space({1, 1});
  std::vector<RandomIndex> fam{RandomIndex(s, {3, 1}), RandomIndex(s, {2, 4})};
  CHECK(ess_least_index(fam) == RandomIndex(s, {2, 1}));
  std::vector<RandomIndex> one{RandomIndex(s, {5, 6})};
  CHECK(ess_least_index(one) == one[0]);
  std::vector<RandomIndex> none;
  CHECK_THROWS_AS(ess_least_index(none), Error);
  CHECK_THROWS_AS(RandomIndex(s, {0, 1}), Error);
}

TEST_CASE("random subsequences") {
  auto s = make_space({1, 1});
  const auto target = RandomPoint::zero(s, 1);

  SUBCASE("constant sequence gives n_k = k") {
    std::vector<RandomPoint> seq(10, target);
    std::vector<RandomScalar> rates;
    for (int k = 1; k <= 5; ++k) rates.push_back(RandomScalar::constant(s, 1.0 / k));
    auto idx = extract_random_subsequence(seq, target, rates);
    for (std::size_t k = 0; k < idx.size(); ++k) CHECK(idx[k] == RandomIndex(s, {k + 1, k + 1}));
  }

  SUBCASE("alternating decay against a brute-force scan") {
    std::vector<RandomPoint> seq;
    for (int n = 1; n <= 40; ++n) seq.push_back(pt(s, {{std::pow(-1.0, n) / n}, {1.0 / n}}));
    std::vector<RandomScalar> rates;
    for (int k = 1; k <= 8; ++k) rates.push_back(RandomScalar::constant(s, 1.0 / k));
    auto idx = extract_random_subsequence(seq, target, rates);
    for (std::size_t a = 0; a < 2; ++a) {
      std::size_t prev = 0;
      for (std::size_t k = 0; k < rates.size(); ++k) {
        std::size_t l = prev + 1;
        while (!(std::fabs(seq[l - 1][a][0]) < rates[k][a])) ++l;
        CHECK(idx[k][a] == l);
        CHECK(l == k + 2);
        prev = l;
      }
    }
  }

  SUBCASE("faster decay never needs later indices") {
    std::vector<RandomPoint> seq;
    for (int n = 1; n <= 200; ++n) seq.push_back(pt(s, {{1.0 / n}, {1.0 / (double(n) * n)}}));
    std::vector<RandomScalar> rates;
    for (int k = 1; k <= 10; ++k) rates.push_back(RandomScalar::constant(s, 0.5 / k));
    auto idx = extract_random_subsequence(seq, target, rates);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      CHECK(idx[k][1] <= idx[k][0]);
      auto x = subsequence_term(seq, idx[k]);
      for (std::size_t a = 0; a < 2; ++a) CHECK(std::fabs(x[a][0]) < rates[k][a]);
    }
  }

  SUBCASE("short prefix and bad rates") {
    std::vector<RandomPoint> seq{pt(s, {{1.0}, {0.01}})};
    std::vector<RandomScalar> rates{RandomScalar::constant(s, 0.1)};
    try {
      extract_random_subsequence(seq, target, rates);
      FAIL("expected PrefixExhausted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::PrefixExhausted);
      CHECK(e.atoms() == std::vector<std::size_t>{0});
    }
    std::vector<RandomScalar> rising{RandomScalar::constant(s, 0.1), RandomScalar::constant(s, 0.2)};
    CHECK_THROWS_AS(extract_random_subsequence(seq, target, rising), Error);
  }
}

TEST_CASE("convex hull nets") {
  auto s = make_space({1, 1});
  auto g0 = pt(s, {{0.0, 0.0}, {1.0, 1.0}});
  SUBCASE("single generator") {
    FiniteSigmaHull hull({g0});
    auto cert = convex_hull_net(hull, RandomScalar::constant(s, 0.3));
    CHECK(cert.partition.piece_count() == 1);
    CHECK(cert.max_set_size() == 1);
  }
  SUBCASE("segment of unit length") {
    auto g1 = pt(s, {{1.0, 0.0}, {1.0, 2.0}});
    FiniteSigmaHull hull({g0, g1});
    const auto eps = RandomScalar::constant(s, 0.3);
    auto cert = convex_hull_net(hull, eps);
    const SetSpec poly = hull_polytope(hull);
    CHECK(verify_net(poly, cert, 10000, 3).passed());
    // consecutive grid points along the segment are closer than eps
    for (std::size_t a = 0; a < 2; ++a) {
      auto pts = cert.points_at(a);
      CHECK(pts.size() >= 4);
    }
  }
  SUBCASE("epsilon above the diameter") {
    auto g1 = pt(s, {{1.0, 0.0}, {1.0, 2.0}});
    auto cert = convex_hull_net(FiniteSigmaHull({g0, g1}), RandomScalar::constant(s, 5.0));
    CHECK(cert.max_set_size() == 1);
  }
}
