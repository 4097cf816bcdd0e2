#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace l0kit::classical {

using Vec = std::vector<double>;
using VecView = std::span<const double>;

/// A map R^d -> R^d acting on one atom's section.
using AtomMap = std::function<Vec(VecView)>;

inline double dot(VecView a, VecView b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(VecView a) { return std::sqrt(dot(a, a)); }

inline double distance(VecView a, VecView b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = a[i] - b[i];
    s += t * t;
  }
  return std::sqrt(s);
}

inline Vec sub(VecView a, VecView b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vec centroid(const std::vector<Vec>& points) {
  Vec c(points.front().size(), 0.0);
  for (const Vec& p : points)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  for (double& v : c) v /= static_cast<double>(points.size());
  return c;
}

/// (1 - t) a + t b
inline Vec lerp(VecView a, VecView b, double t) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (1.0 - t) * a[i] + t * b[i];
  return out;
}

}  // namespace l0kit::classical
