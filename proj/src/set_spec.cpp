#include "l0kit/set_spec.hpp"

#include <cmath>

#include "l0kit/classical/polytope.hpp"

namespace l0kit {

FiniteSigmaHull::FiniteSigmaHull(std::vector<RandomPoint> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw Error(Errc::EmptyFamily, "sigma hull needs at least one generator");
  for (const auto& g : gens_) require_same_shape(gens_.front(), g);
}

AtomwisePolytope::AtomwisePolytope(SpacePtr space, std::size_t dim, std::vector<std::vector<Vec>> vertices)
    : space_(std::move(space)), dim_(dim), vertices_(std::move(vertices)) {
  if (!space_) throw Error(Errc::BadValue, "polytope without a space");
  if (dim_ == 0) throw Error(Errc::DimMismatch, "dimension must be positive");
  if (vertices_.size() != space_->size())
    throw Error(Errc::BadValue, "polytope needs one vertex list per atom");
  std::vector<std::size_t> empty;
  for (std::size_t a = 0; a < vertices_.size(); ++a) {
    if (vertices_[a].empty()) empty.push_back(a);
    for (const Vec& v : vertices_[a]) {
      if (v.size() != dim_) throw Error(Errc::DimMismatch, "vertex length differs from dimension", {a});
      for (double c : v)
        if (!std::isfinite(c)) throw Error(Errc::BadValue, "vertex coordinates must be finite", {a});
    }
  }
  if (!empty.empty()) throw Error(Errc::EmptySection, "empty vertex list", empty);
}

AtomwisePolytope AtomwisePolytope::uniform(SpacePtr space, std::vector<Vec> vertices) {
  if (vertices.empty()) throw Error(Errc::EmptySection, "empty vertex list");
  const std::size_t n = space->size();
  const std::size_t d = vertices.front().size();
  return AtomwisePolytope(std::move(space), d, std::vector<std::vector<Vec>>(n, std::move(vertices)));
}

RandomScalar AtomwisePolytope::distance(const RandomPoint& x) const {
  require_same_space(space_, x.space());
  if (x.dim() != dim_) throw Error(Errc::DimMismatch, "point and polytope differ in dimension");
  std::vector<double> v(x.size());
  for (std::size_t a = 0; a < v.size(); ++a) v[a] = classical::distance_to_polytope(vertices_[a], x[a]);
  return RandomScalar(space_, std::move(v));
}

RandomPoint AtomwisePolytope::vertex_point(std::size_t k) const {
  std::vector<Vec> out(vertices_.size());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = vertices_[a][std::min(k, vertices_[a].size() - 1)];
  return RandomPoint(space_, dim_, std::move(out));
}

const SpacePtr& spec_space(const SetSpec& spec) {
  return std::visit([](const auto& s) -> const SpacePtr& { return s.space(); }, spec);
}

std::size_t spec_dim(const SetSpec& spec) {
  return std::visit([](const auto& s) { return s.dim(); }, spec);
}

const char* spec_kind(const SetSpec& spec) {
  switch (spec.index()) {
    case 0: return "sigma_hull";
    case 1: return "polytope";
    default: return "ball";
  }
}

Vec sample_in_hull(const std::vector<Vec>& vertices, Rng& rng) {
  const std::size_t n = vertices.size();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> mode(0, 2);
  const int m = n == 1 ? 0 : mode(rng);
  if (m == 0) return vertices[pick(rng)];
  if (m == 1) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    const double t = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    return classical::lerp(vertices[i], vertices[j], t);
  }
  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = gamma(rng);
    total += x;
  }
  Vec out(vertices.front().size(), 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += (w[k] / total) * vertices[k][i];
  return out;
}

RandomPoint sample_point(const SetSpec& spec, Rng& rng) {
  const SpacePtr& space = spec_space(spec);
  const std::size_t d = spec_dim(spec);
  std::vector<Vec> out(space->size());
  if (const auto* hull = std::get_if<FiniteSigmaHull>(&spec)) {
    std::uniform_int_distribution<std::size_t> pick(0, hull->generators().size() - 1);
    for (std::size_t a = 0; a < out.size(); ++a) out[a] = hull->generators()[pick(rng)][a];
  } else if (const auto* poly = std::get_if<AtomwisePolytope>(&spec)) {
    for (std::size_t a = 0; a < out.size(); ++a) out[a] = sample_in_hull(poly->vertices(a), rng);
  } else {
    const auto& ball = std::get<EpsilonBall>(spec).ball();
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t a = 0; a < out.size(); ++a) {
      Vec dir(d);
      for (double& c : dir) c = gauss(rng);
      const double len = classical::norm(dir);
      const double r = 0.999 * ball.radius()[a] * std::pow(unit(rng), 1.0 / static_cast<double>(d));
      out[a] = ball.center()[a];
      if (len > 0.0)
        for (std::size_t i = 0; i < d; ++i) out[a][i] += r * dir[i] / len;
    }
  }
  return RandomPoint(space, d, std::move(out));
}

}  // namespace l0kit
