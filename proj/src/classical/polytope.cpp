#include "l0kit/classical/polytope.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "l0kit/error.hpp"

namespace l0kit::classical {

namespace {

// argmin |sum v_i p_i| subject to sum v_i = 1 over the active set.
Vec affine_minimizer(const std::vector<Vec>& p, const std::vector<std::size_t>& active) {
  const auto k = static_cast<Eigen::Index>(active.size());
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b <= a; ++b) {
      const double g = dot(p[active[a]], p[active[b]]);
      kkt(a, b) = g;
      kkt(b, a) = g;
    }
    kkt(a, k) = 1.0;
    kkt(k, a) = 1.0;
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  rhs(k) = 1.0;
  const Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
  Vec v(active.size());
  for (Eigen::Index a = 0; a < k; ++a) v[a] = sol(a);
  return v;
}

Vec combine(const std::vector<Vec>& p, const std::vector<std::size_t>& active, const Vec& w) {
  Vec y(p.front().size(), 0.0);
  for (std::size_t a = 0; a < active.size(); ++a)
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += w[a] * p[active[a]][i];
  return y;
}

}  // namespace

NearestPoint nearest_point(const std::vector<Vec>& vertices, VecView x) {
  if (vertices.empty()) throw Error(Errc::EmptySection, "polytope without vertices");
  const std::size_t n = vertices.size();
  std::vector<Vec> p(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = sub(vertices[i], x);
    scale = std::max(scale, norm(p[i]));
  }
  if (scale == 0.0) {
    NearestPoint out{Vec(x.begin(), x.end()), Vec(n, 0.0), 0.0};
    out.weights[0] = 1.0;
    return out;
  }

  std::size_t first = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (dot(p[i], p[i]) < dot(p[first], p[first])) first = i;
  std::vector<std::size_t> active{first};
  Vec w{1.0};
  Vec y = p[first];

  constexpr double kPositive = 1e-15;
  for (int major = 0; major < 1000; ++major) {
    const double yn = norm(y);
    if (yn <= 1e-15 * scale) break;
    std::size_t j = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double s = dot(y, p[i]);
      if (s < best) {
        best = s;
        j = i;
      }
    }
    if (dot(y, y) - best <= 1e-13 * yn * scale) break;
    if (std::find(active.begin(), active.end(), j) != active.end()) break;
    active.push_back(j);
    w.push_back(0.0);

    for (int minor = 0; minor < 1000; ++minor) {
      Vec v = affine_minimizer(p, active);
      if (std::all_of(v.begin(), v.end(), [](double t) { return t > kPositive; })) {
        w = std::move(v);
        break;
      }
      // step toward v until the first weight hits zero; that index leaves
      double theta = std::numeric_limits<double>::infinity();
      std::size_t drop = 0;
      for (std::size_t a = 0; a < active.size(); ++a) {
        if (v[a] > kPositive) continue;
        const double t = w[a] - v[a] > 0.0 ? w[a] / (w[a] - v[a]) : 0.0;
        if (t < theta) {
          theta = t;
          drop = a;
        }
      }
      theta = std::min(theta, 1.0);
      for (std::size_t a = 0; a < active.size(); ++a) w[a] = (1.0 - theta) * w[a] + theta * v[a];
      w[drop] = 0.0;
      std::vector<std::size_t> keep_idx;
      Vec keep_w;
      for (std::size_t a = 0; a < active.size(); ++a) {
        if (w[a] > kPositive) {
          keep_idx.push_back(active[a]);
          keep_w.push_back(w[a]);
        }
      }
      if (keep_idx.empty()) {  // numerical corner; fall back to the newest point
        keep_idx.push_back(active.back());
        keep_w.push_back(1.0);
      }
      double total = 0.0;
      for (double t : keep_w) total += t;
      for (double& t : keep_w) t /= total;
      active = std::move(keep_idx);
      w = std::move(keep_w);
      if (active.size() == 1) break;
    }
    y = combine(p, active, w);
  }

  NearestPoint out;
  out.weights.assign(n, 0.0);
  for (std::size_t a = 0; a < active.size(); ++a) out.weights[active[a]] = w[a];
  out.point.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.point[i] = x[i] + y[i];
  out.distance = norm(y);
  return out;
}

double distance_to_polytope(const std::vector<Vec>& vertices, VecView x) {
  return nearest_point(vertices, x).distance;
}

double polytope_scale(const std::vector<Vec>& vertices) {
  double s = 1.0;
  for (const Vec& v : vertices)
    for (double c : v) s = std::max(s, std::fabs(c));
  return s;
}

double polytope_diameter(const std::vector<Vec>& vertices) {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) d = std::max(d, distance(vertices[i], vertices[j]));
  return d;
}

// ---------------------------------------------------------------- lattice cover

LatticeCover::LatticeCover(std::vector<Vec> vertices, double spacing)
    : vertices_(std::move(vertices)), h_(spacing) {
  if (vertices_.empty()) throw Error(Errc::EmptySection, "polytope without vertices");
  if (!(h_ > 0.0)) throw Error(Errc::BadEpsilon, "lattice spacing must be positive");
  const std::size_t d = vertices_.front().size();
  lo_ = vertices_.front();
  Vec hi = vertices_.front();
  for (const Vec& v : vertices_) {
    for (std::size_t i = 0; i < d; ++i) {
      lo_[i] = std::min(lo_[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  count_.resize(d);
  for (std::size_t i = 0; i < d; ++i)
    count_[i] = static_cast<std::int64_t>(std::ceil((hi[i] - lo_[i]) / h_)) + 1;
  radius_ = h_ * std::sqrt(static_cast<double>(d)) / 2.0;
}

double LatticeCover::site_count() const {
  double n = 1.0;
  for (auto c : count_) n *= static_cast<double>(c);
  return n;
}

double LatticeCover::site_count(const std::vector<Vec>& vertices, double spacing) {
  const std::size_t d = vertices.front().size();
  double n = 1.0;
  for (std::size_t i = 0; i < d; ++i) {
    double lo = vertices.front()[i];
    double hi = lo;
    for (const Vec& v : vertices) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    n *= std::ceil((hi - lo) / spacing) + 1.0;
  }
  return n;
}

std::optional<Vec> LatticeCover::site_point(const std::vector<std::int64_t>& index) const {
  for (std::size_t i = 0; i < index.size(); ++i)
    if (index[i] < 0 || index[i] >= count_[i]) return std::nullopt;
  if (auto it = cache_.find(index); it != cache_.end()) return it->second;
  Vec q(index.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = lo_[i] + h_ * static_cast<double>(index[i]);
  NearestPoint np = nearest_point(vertices_, q);
  std::optional<Vec> out;
  if (np.distance <= radius_) out = std::move(np.point);
  cache_.emplace(index, out);
  return out;
}

namespace {

template <class Visit>
void for_each_index(const std::vector<std::int64_t>& first, const std::vector<std::int64_t>& last,
                    Visit visit) {
  const std::size_t d = first.size();
  for (std::size_t i = 0; i < d; ++i)
    if (first[i] > last[i]) return;
  std::vector<std::int64_t> idx = first;
  while (true) {
    visit(idx);
    std::size_t axis = d;
    while (axis > 0) {
      --axis;
      if (idx[axis] < last[axis]) {
        ++idx[axis];
        for (std::size_t k = axis + 1; k < d; ++k) idx[k] = first[k];
        break;
      }
      if (axis == 0) return;
    }
    if (d == 0) return;
  }
}

}  // namespace

std::vector<Vec> LatticeCover::enumerate() const {
  std::vector<Vec> out = vertices_;
  std::vector<std::int64_t> first(count_.size(), 0);
  std::vector<std::int64_t> last(count_.size());
  for (std::size_t i = 0; i < last.size(); ++i) last[i] = count_[i] - 1;
  for_each_index(first, last, [&](const std::vector<std::int64_t>& idx) {
    Vec q(idx.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = lo_[i] + h_ * static_cast<double>(idx[i]);
    NearestPoint np = nearest_point(vertices_, q);
    if (np.distance <= radius_) out.push_back(std::move(np.point));
  });
  return out;
}

std::vector<std::vector<std::int64_t>> LatticeCover::sites_near(VecView z, double reach) const {
  const double r = reach + radius_;
  const std::size_t d = count_.size();
  std::vector<std::int64_t> first(d), last(d);
  for (std::size_t i = 0; i < d; ++i) {
    first[i] = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil((z[i] - r - lo_[i]) / h_)));
    last[i] = std::min<std::int64_t>(count_[i] - 1,
                                     static_cast<std::int64_t>(std::floor((z[i] + r - lo_[i]) / h_)));
  }
  std::vector<std::vector<std::int64_t>> out;
  for_each_index(first, last, [&](const std::vector<std::int64_t>& idx) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double t = lo_[i] + h_ * static_cast<double>(idx[i]) - z[i];
      s += t * t;
    }
    if (std::sqrt(s) <= r) out.push_back(idx);
  });
  return out;
}

// ---------------------------------------------------------------- projection kernel

namespace {

struct WeightedSum {
  Vec num;
  double total = 0.0;

  void add(VecView p, double eps, VecView z) {
    const double u = eps - distance(z, p);
    if (u > 0.0) {
      total += u;
      for (std::size_t i = 0; i < num.size(); ++i) num[i] += u * p[i];
    }
  }

  std::optional<Vec> finish() {
    if (!(total > 0.0)) return std::nullopt;
    for (double& v : num) v /= total;
    return std::move(num);
  }
};

}  // namespace

std::optional<Vec> schauder_combination(const std::vector<Vec>& points, double eps, VecView z) {
  WeightedSum acc{Vec(z.size(), 0.0)};
  for (const Vec& p : points) acc.add(p, eps, z);
  return acc.finish();
}

std::optional<Vec> schauder_combination(const LatticeCover& cover, double eps, VecView z) {
  WeightedSum acc{Vec(z.size(), 0.0)};
  for (const Vec& v : cover.vertices()) acc.add(v, eps, z);
  for (const auto& idx : cover.sites_near(z, eps)) {
    if (auto p = cover.site_point(idx)) acc.add(*p, eps, z);
  }
  return acc.finish();
}

}  // namespace l0kit::classical
