#include "l0kit/rn_module.hpp"

#include <cmath>

#include "l0kit/classical/polytope.hpp"
#include "l0kit/set_spec.hpp"

namespace l0kit {

RandomPoint::RandomPoint(SpacePtr space, std::size_t dim, std::vector<Vec> coords)
    : space_(std::move(space)), dim_(dim), coords_(std::move(coords)) {
  if (!space_) throw Error(Errc::BadValue, "random point without a space");
  if (dim_ == 0) throw Error(Errc::DimMismatch, "dimension must be positive");
  if (coords_.size() != space_->size()) throw Error(Errc::BadValue, "random point needs one section per atom");
  std::vector<std::size_t> bad;
  for (std::size_t a = 0; a < coords_.size(); ++a) {
    if (coords_[a].size() != dim_) throw Error(Errc::DimMismatch, "section length differs from dimension", {a});
    for (double v : coords_[a])
      if (!std::isfinite(v)) {
        bad.push_back(a);
        break;
      }
  }
  if (!bad.empty()) throw Error(Errc::BadValue, "random point coordinates must be finite", bad);
}

RandomPoint RandomPoint::zero(SpacePtr space, std::size_t dim) {
  const std::size_t n = space->size();
  return RandomPoint(std::move(space), dim, std::vector<Vec>(n, Vec(dim, 0.0)));
}

RandomPoint RandomPoint::constant(SpacePtr space, Vec value) {
  const std::size_t n = space->size();
  const std::size_t d = value.size();
  return RandomPoint(std::move(space), d, std::vector<Vec>(n, std::move(value)));
}

void require_same_shape(const RandomPoint& a, const RandomPoint& b) {
  require_same_space(a.space(), b.space());
  if (a.dim() != b.dim()) throw Error(Errc::DimMismatch, "random points of different dimension");
}

RandomScalar random_norm(const RandomPoint& x) {
  std::vector<double> v(x.size());
  for (std::size_t a = 0; a < v.size(); ++a) v[a] = classical::norm(x[a]);
  return RandomScalar(x.space(), std::move(v));
}

RandomPoint module_scale(const RandomScalar& xi, const RandomPoint& x) {
  require_same_space(xi.space(), x.space());
  std::vector<Vec> out(x.coords());
  for (std::size_t a = 0; a < out.size(); ++a)
    for (double& c : out[a]) c *= xi[a];
  return RandomPoint(x.space(), x.dim(), std::move(out));
}

RandomPoint add(const RandomPoint& x, const RandomPoint& y) {
  require_same_shape(x, y);
  std::vector<Vec> out(x.coords());
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t i = 0; i < x.dim(); ++i) out[a][i] += y[a][i];
  return RandomPoint(x.space(), x.dim(), std::move(out));
}

RandomPoint subtract(const RandomPoint& x, const RandomPoint& y) {
  require_same_shape(x, y);
  std::vector<Vec> out(x.coords());
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t i = 0; i < x.dim(); ++i) out[a][i] -= y[a][i];
  return RandomPoint(x.space(), x.dim(), std::move(out));
}

RandomPoint glue_points(const MeasurablePartition& partition, std::span<const RandomPoint> pieces) {
  if (pieces.size() != partition.piece_count())
    throw Error(Errc::PieceCountMismatch, "glue_points needs one point per piece");
  for (const auto& p : pieces) {
    require_same_space(partition.space(), p.space());
    require_same_shape(pieces.front(), p);
  }
  std::vector<Vec> out(partition.space()->size());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = pieces[partition.label(a)][a];
  return RandomPoint(partition.space(), pieces.front().dim(), std::move(out));
}

DistanceToSet distance_to_finite_set(const RandomPoint& x, std::span<const RandomPoint> gens) {
  if (gens.empty()) throw Error(Errc::EmptyFamily, "distance to an empty generator list");
  for (const auto& g : gens) require_same_shape(x, g);
  const std::size_t n = x.size();
  std::vector<double> dist(n);
  std::vector<std::size_t> chosen(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    dist[a] = classical::distance(x[a], gens[0][a]);
    for (std::size_t k = 1; k < gens.size(); ++k) {
      const double d = classical::distance(x[a], gens[k][a]);
      if (d < dist[a]) {
        dist[a] = d;
        chosen[a] = k;
      }
    }
  }
  // compact labels: used generators in increasing index order
  std::vector<std::size_t> rank(gens.size(), 0);
  std::vector<bool> used(gens.size(), false);
  for (std::size_t k : chosen) used[k] = true;
  std::size_t next = 0;
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (used[k]) rank[k] = next++;
  std::vector<std::size_t> labels(n);
  for (std::size_t a = 0; a < n; ++a) labels[a] = rank[chosen[a]];
  return {RandomScalar(x.space(), std::move(dist)), MeasurablePartition(x.space(), std::move(labels)),
          std::move(chosen)};
}

RandomBall::RandomBall(RandomPoint center, RandomScalar radius)
    : center_(std::move(center)), radius_(std::move(radius)) {
  require_same_space(center_.space(), radius_.space());
  std::vector<std::size_t> bad;
  for (std::size_t a = 0; a < radius_.size(); ++a)
    if (!(radius_[a] > 0.0)) bad.push_back(a);
  if (!bad.empty()) throw Error(Errc::BadEpsilon, "ball radius must be positive at every atom", bad);
}

bool ball_contains(const RandomBall& ball, const RandomPoint& x) {
  require_same_shape(ball.center(), x);
  for (std::size_t a = 0; a < x.size(); ++a)
    if (!(classical::distance(x[a], ball.center()[a]) < ball.radius()[a])) return false;
  return true;
}

double el_quasinorm(const RandomPoint& x) {
  double s = 0.0;
  for (std::size_t a = 0; a < x.size(); ++a) {
    const double r = classical::norm(x[a]);
    s += x.space()->weight(a) * (r / (1.0 + r));
  }
  return s;
}

RandomScalar random_diameter(const AtomwisePolytope& polytope) {
  std::vector<double> v(polytope.space()->size());
  for (std::size_t a = 0; a < v.size(); ++a) v[a] = classical::polytope_diameter(polytope.vertices(a));
  return RandomScalar(polytope.space(), std::move(v));
}

}  // namespace l0kit
