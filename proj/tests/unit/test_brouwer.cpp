#include <doctest.h>

#include <cmath>

#include "l0kit/classical/brouwer.hpp"
#include "l0kit/classical/polytope.hpp"
#include "l0kit/error.hpp"

using namespace l0kit;
using namespace l0kit::classical;

namespace {

const std::vector<Vec> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

AtomMap rotation(double angle, double scale, Vec c) {
  return [=](VecView x) {
    const double u = x[0] - c[0], v = x[1] - c[1];
    return Vec{c[0] + scale * (std::cos(angle) * u - std::sin(angle) * v),
               c[1] + scale * (std::sin(angle) * u + std::cos(angle) * v)};
  };
}

}  // namespace

TEST_CASE("identity returns the first seed with zero residual") {
  BrouwerOptions o;
  o.seeds = {{0.3, 0.7}};
  const auto r = solve_brouwer_atom([](VecView x) { return Vec(x.begin(), x.end()); }, kSquare, o);
  CHECK(r.point == Vec{0.3, 0.7});
  CHECK(r.residual == 0.0);
}

TEST_CASE("constant map") {
  const auto r = solve_brouwer_atom([](VecView) { return Vec{0.2, 0.9}; }, kSquare);
  CHECK(distance(r.point, Vec{0.2, 0.9}) <= 1e-9);
}

TEST_CASE("damped rotation about the centroid") {
  // a contraction with unique fixed point (0.5, 0.5); scale 0.7 keeps the square invariant
  const auto r = solve_brouwer_atom(rotation(0.5, 0.7, {0.5, 0.5}), kSquare);
  CHECK(distance(r.point, Vec{0.5, 0.5}) <= 1e-9 / (1.0 - 0.7));
  CHECK(r.residual <= 1e-9);
}

TEST_CASE("rotation by 0.5 rad scaled by 0.9 leaves the unit square") {
  // the corner (1,1) maps to about (0.68, 1.11)
  const auto f = rotation(0.5, 0.9, {0.5, 0.5});
  const Vec img = f(Vec{1, 1});
  CHECK(std::max(img[0], img[1]) > 1.0);
  try {
    solve_brouwer_atom(f, kSquare);
    FAIL("expected NotSelfMap");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSelfMap);
  }
}

TEST_CASE("simplicial fallback reaches the tolerance") {
  BrouwerOptions o;
  o.max_iter = 0;  // skip damped iteration
  o.tol = 1e-6;
  const std::vector<Vec> interval{{0}, {1}};
  const auto r1 = solve_brouwer_atom([](VecView x) { return Vec{0.25 + 0.5 * x[0] * x[0]}; }, interval, o);
  CHECK(r1.subdivision);
  CHECK(r1.residual <= 1e-6);
  // closed form root of x = 0.25 + 0.5 x^2
  CHECK(r1.point[0] == doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-5));

  const auto r2 = solve_brouwer_atom(
      [](VecView x) { return Vec{0.5 * x[1] * x[1] + 0.1, 0.3 + 0.4 * x[0]}; }, kSquare, o);
  CHECK(r2.residual <= 1e-6);

  const std::vector<Vec> tri{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const auto r3 = solve_brouwer_atom(
      [](VecView x) { return Vec{0.2 + 0.1 * x[1], 0.1 + 0.2 * x[2] * x[2], 0.3 * x[0]}; }, tri, o);
  CHECK(r3.residual <= 1e-6);
  CHECK(distance_to_polytope(tri, r3.point) < 1e-9);
}

TEST_CASE("a map with several fixed points") {
  const std::vector<Vec> interval{{0}, {1}};
  const auto r = solve_brouwer_atom([](VecView x) { return Vec{x[0] * x[0]}; }, interval);
  CHECK(r.residual <= 1e-9);
}
