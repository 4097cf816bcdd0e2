#include "l0kit/geometry.hpp"

#include <cmath>

#include "l0kit/classical/polytope.hpp"

namespace l0kit {

RandomPoint l0_convex_combination(std::span<const RandomScalar> weights, std::span<const RandomPoint> points) {
  if (points.empty()) throw Error(Errc::EmptyFamily, "convex combination of nothing");
  if (weights.size() != points.size()) throw Error(Errc::NotConvexWeights, "one weight per point required");
  const RandomPoint& first = points.front();
  for (const auto& p : points) require_same_shape(first, p);
  for (const auto& w : weights) require_same_space(first.space(), w.space());

  std::vector<std::size_t> bad;
  for (std::size_t a = 0; a < first.size(); ++a) {
    double total = 0.0;
    bool negative = false;
    for (const auto& w : weights) {
      total += w[a];
      negative = negative || w[a] < 0.0;
    }
    if (negative || std::fabs(total - 1.0) > 1e-12) bad.push_back(a);
  }
  if (!bad.empty()) throw Error(Errc::NotConvexWeights, "weights must be nonnegative and sum to one", bad);

  std::vector<Vec> out(first.size(), Vec(first.dim(), 0.0));
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t k = 0; k < points.size(); ++k)
      for (std::size_t i = 0; i < first.dim(); ++i) out[a][i] += weights[k][a] * points[k][a][i];
  return RandomPoint(first.space(), first.dim(), std::move(out));
}

ProjectionSpec::ProjectionSpec(std::vector<RandomPoint> generators, RandomScalar epsilon)
    : gens_(std::move(generators)), eps_(std::move(epsilon)) {
  if (gens_.empty()) throw Error(Errc::EmptyFamily, "projection needs generators");
  for (const auto& g : gens_) require_same_shape(gens_.front(), g);
  require_same_space(gens_.front().space(), eps_.space());
  std::vector<std::size_t> bad;
  for (std::size_t a = 0; a < eps_.size(); ++a)
    if (!(eps_[a] > 0.0)) bad.push_back(a);
  if (!bad.empty()) throw Error(Errc::BadEpsilon, "epsilon must be positive at every atom", bad);
}

RandomPoint schauder_projection(const ProjectionSpec& spec, const RandomPoint& x) {
  require_same_shape(spec.generators().front(), x);
  std::vector<Vec> out(x.size());
  std::vector<std::size_t> outside;
  std::vector<Vec> pts(spec.generators().size());
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t k = 0; k < pts.size(); ++k) pts[k] = spec.generators()[k][a];
    auto p = classical::schauder_combination(pts, spec.epsilon()[a], x[a]);
    if (p)
      out[a] = std::move(*p);
    else
      outside.push_back(a);
  }
  if (!outside.empty()) throw Error(Errc::OutsideEnlargement, "point outside the epsilon-enlargement", outside);
  return RandomPoint(x.space(), x.dim(), std::move(out));
}

SeparationResult separate(const RandomPoint& x, const AtomwisePolytope& set) {
  require_same_space(x.space(), set.space());
  if (x.dim() != set.dim()) throw Error(Errc::DimMismatch, "point and polytope differ in dimension");
  const std::size_t n = x.size();
  std::vector<Vec> y(n, Vec(x.dim(), 0.0));
  std::vector<double> sup(n, 0.0), val(n, 0.0), dist(n, 0.0);
  std::vector<std::size_t> strict;
  for (std::size_t a = 0; a < n; ++a) {
    const auto np = classical::nearest_point(set.vertices(a), x[a]);
    dist[a] = np.distance;
    if (np.distance > kSeparationFloor) {
      strict.push_back(a);
      y[a] = classical::sub(x[a], np.point);
      val[a] = classical::dot(y[a], x[a]);
      sup[a] = classical::dot(y[a], set.vertices(a).front());
      for (const Vec& v : set.vertices(a)) sup[a] = std::max(sup[a], classical::dot(y[a], v));
    }
  }
  return {RandomPoint(x.space(), x.dim(), std::move(y)), Event(x.space(), std::move(strict)),
          RandomScalar(x.space(), std::move(sup)), RandomScalar(x.space(), std::move(val)),
          RandomScalar(x.space(), std::move(dist))};
}

NormalStructure normal_structure_check(const AtomwisePolytope& set) {
  const std::size_t n = set.space()->size();
  std::vector<Vec> bary(n);
  std::vector<double> radius(n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    bary[a] = classical::centroid(set.vertices(a));
    for (const Vec& v : set.vertices(a)) radius[a] = std::max(radius[a], classical::distance(bary[a], v));
  }
  NormalStructure out{RandomPoint(set.space(), set.dim(), std::move(bary)),
                      RandomScalar(set.space(), std::move(radius)), random_diameter(set), false};
  out.holds = true;
  for (std::size_t a = 0; a < n; ++a)
    out.holds = out.holds && out.diameter[a] > 0.0 && out.radius[a] < out.diameter[a];
  return out;
}

}  // namespace l0kit
