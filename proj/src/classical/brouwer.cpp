#include "l0kit/classical/brouwer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>

#include "l0kit/classical/polytope.hpp"
#include "l0kit/error.hpp"

namespace l0kit::classical {

double self_map_slack(const std::vector<Vec>& vertices) { return 1e-9 * polytope_scale(vertices); }

namespace {

void check_dims(const std::vector<Vec>& vertices) {
  if (vertices.empty()) throw Error(Errc::EmptySection, "polytope without vertices");
  const std::size_t d = vertices.front().size();
  if (d == 0) throw Error(Errc::DimMismatch, "zero-dimensional polytope");
  for (const Vec& v : vertices)
    if (v.size() != d) throw Error(Errc::DimMismatch, "vertices of unequal length");
}

Vec eval_checked(const AtomMap& f, VecView x, std::size_t d) {
  Vec y = f(x);
  if (y.size() != d) throw Error(Errc::DimMismatch, "map changed the dimension");
  for (double v : y)
    if (!std::isfinite(v)) throw Error(Errc::BadValue, "map produced a non-finite value");
  return y;
}

// Sperner path-following on the Freudenthal subdivision of the simplex
// {lo + side * u : u >= 0, sum u <= 1} with grid m. Vertices are stored in
// tail-sum coordinates c_a = k_{a+1} + ... + k_d, so the region is
// m >= c_0 >= c_1 >= ... >= c_{d-1} >= 0.
class SpernerLevel {
 public:
  using Coord = std::vector<std::int64_t>;

  SpernerLevel(const AtomMap& f, const std::vector<Vec>& vertices, const Vec& lo, double side,
               std::int64_t m, std::size_t& evaluations)
      : f_(f), vertices_(vertices), lo_(lo), side_(side), m_(m), d_(lo.size()), evals_(evaluations) {}

  struct Sample {
    int label;
    Vec point;  // projected onto the polytope
    double residual;
  };

  Vec position(const Coord& c) const {
    Vec x(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      const std::int64_t k = c[i] - (i + 1 < d_ ? c[i + 1] : 0);
      x[i] = lo_[i] + side_ * static_cast<double>(k) / static_cast<double>(m_);
    }
    return x;
  }

  Sample evaluate(VecView x, const Coord* c) {
    Vec p = nearest_point(vertices_, x).point;
    Vec y = eval_checked(f_, p, d_);
    ++evals_;
    const double residual = distance(y, p);
    int label = 0;
    if (c != nullptr) {
      // barycentric weights of x (lambda) and of f(pi(x)) (mu)
      std::vector<std::int64_t> k(d_ + 1);
      k[0] = m_ - (*c)[0];
      for (std::size_t i = 1; i <= d_; ++i) k[i] = (*c)[i - 1] - (i < d_ ? (*c)[i] : 0);
      std::vector<double> mu(d_ + 1);
      double tail = 0.0;
      for (std::size_t i = 1; i <= d_; ++i) {
        mu[i] = (y[i - 1] - lo_[i - 1]) / side_;
        tail += mu[i];
      }
      mu[0] = 1.0 - tail;
      label = -1;
      double slack = std::numeric_limits<double>::infinity();
      int fallback = -1;
      for (std::size_t i = 0; i <= d_; ++i) {
        if (k[i] <= 0) continue;
        const double lambda = static_cast<double>(k[i]) / static_cast<double>(m_);
        if (mu[i] <= lambda) {
          label = static_cast<int>(i);
          break;
        }
        if (mu[i] - lambda < slack) {
          slack = mu[i] - lambda;
          fallback = static_cast<int>(i);
        }
      }
      if (label < 0) label = fallback;  // rounding only; keeps the Sperner boundary rule
    }
    return {label, std::move(p), residual};
  }

  const Sample& sample(const Coord& c) {
    auto it = cache_.find(c);
    if (it == cache_.end()) it = cache_.emplace(c, evaluate(position(c), &c)).first;
    return it->second;
  }

  bool in_region(const Coord& c, std::size_t j) const {
    if (c[0] > m_) return false;
    for (std::size_t a = 0; a + 1 < j; ++a)
      if (c[a] < c[a + 1]) return false;
    return c[j - 1] >= 0;
  }

  /// Walks to a completely labelled full-dimensional cell; returns its vertices.
  std::optional<std::vector<Coord>> walk(std::size_t budget) {
    std::size_t j = 1;
    std::vector<std::int64_t> perm{0};
    std::vector<Coord> cell{Coord(d_, 0), Coord(d_, 0)};
    cell[1][0] = 1;
    std::vector<int> labels{sample(cell[0]).label, sample(cell[1]).label};
    std::size_t fresh = 1;
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::size_t pending = kNone;

    for (std::size_t pivots = 0; pivots < budget; ++pivots) {
      if (pending == kNone) {
        if (labels[fresh] == static_cast<int>(j)) {
          if (j == d_) return cell;
          // raise the dimension: the complete cell becomes a door of the next face
          Coord v = cell.back();
          v[j] += 1;
          perm.push_back(static_cast<std::int64_t>(j));
          labels.push_back(sample(v).label);
          cell.push_back(std::move(v));
          ++j;
          fresh = j;
          continue;
        }
        for (std::size_t a = 0; a <= j; ++a) {
          if (a != fresh && labels[a] == labels[fresh]) {
            pending = a;
            break;
          }
        }
        if (pending == kNone) return std::nullopt;
      }
      const std::size_t i = pending;
      pending = kNone;

      Coord v;
      if (i == 0) {
        v = cell[j];
        v[perm[0]] += 1;
      } else if (i == j) {
        v = cell[0];
        v[perm[j - 1]] -= 1;
      } else {
        v = cell[i - 1];
        v[perm[i]] += 1;
      }

      if (!in_region(v, j)) {
        // the door lies on the face c_{j-1} = 0: continue one dimension down
        if (i != j || perm.back() != static_cast<std::int64_t>(j - 1) || j == 1) return std::nullopt;
        cell.pop_back();
        labels.pop_back();
        perm.pop_back();
        --j;
        for (std::size_t a = 0; a <= j; ++a)
          if (labels[a] == static_cast<int>(j)) pending = a;
        if (pending == kNone) return std::nullopt;
        continue;
      }

      const int lab = sample(v).label;
      if (i == 0) {
        std::rotate(perm.begin(), perm.begin() + 1, perm.end());
        cell.erase(cell.begin());
        labels.erase(labels.begin());
        cell.push_back(std::move(v));
        labels.push_back(lab);
        fresh = j;
      } else if (i == j) {
        std::rotate(perm.rbegin(), perm.rbegin() + 1, perm.rend());
        cell.pop_back();
        labels.pop_back();
        cell.insert(cell.begin(), std::move(v));
        labels.insert(labels.begin(), lab);
        fresh = 0;
      } else {
        std::swap(perm[i - 1], perm[i]);
        cell[i] = std::move(v);
        labels[i] = lab;
        fresh = i;
      }
    }
    return std::nullopt;
  }

 private:
  const AtomMap& f_;
  const std::vector<Vec>& vertices_;
  const Vec& lo_;
  double side_;
  std::int64_t m_;
  std::size_t d_;
  std::size_t& evals_;
  std::map<Coord, Sample> cache_;
};

}  // namespace

BrouwerResult solve_brouwer_atom(const AtomMap& f, const std::vector<Vec>& vertices,
                                 const BrouwerOptions& options) {
  check_dims(vertices);
  const std::size_t d = vertices.front().size();
  const double slack = self_map_slack(vertices);
  BrouwerResult best;
  best.residual = std::numeric_limits<double>::infinity();

  auto require_inside = [&](const Vec& fx) {
    if (distance_to_polytope(vertices, fx) > slack) throw Error(Errc::NotSelfMap, "map leaves the polytope");
  };
  for (const Vec& v : vertices) {
    Vec fv = eval_checked(f, v, d);
    ++best.evaluations;
    require_inside(fv);
  }

  std::vector<Vec> seeds;
  for (const Vec& s : options.seeds) {
    if (s.size() != d) throw Error(Errc::DimMismatch, "seed of wrong dimension");
    seeds.push_back(s);
  }
  const Vec c = centroid(vertices);
  seeds.push_back(c);
  for (std::size_t i = 0; i < vertices.size() && seeds.size() < 8; ++i) seeds.push_back(lerp(c, vertices[i], 0.5));
  if (seeds.size() > 8) seeds.resize(8);

  for (const Vec& seed : seeds) {
    Vec x = seed;
    for (int it = 0; it <= options.max_iter; ++it) {
      Vec fx = eval_checked(f, x, d);
      ++best.evaluations;
      if (it == 0) require_inside(fx);
      const double r = distance(fx, x);
      if (r < best.residual) {
        best.residual = r;
        best.point = x;
      }
      if (r <= options.tol) {
        best.subdivision = false;
        return best;
      }
      for (std::size_t i = 0; i < d; ++i) x[i] = 0.5 * x[i] + 0.5 * fx[i];
    }
  }

  Vec lo = vertices.front();
  Vec hi = vertices.front();
  for (const Vec& v : vertices) {
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  double side = 0.0;
  for (std::size_t i = 0; i < d; ++i) side += hi[i] - lo[i];
  if (!(side > 0.0))
    throw Error(Errc::NoConvergence, "degenerate polytope and no fixed point found", {}, best.residual);

  // Global levels double the grid; after each hit, zoom levels walk a small
  // simplex centred on the best point with a fixed grid. Zoomed cells may
  // approximate fixed points of the clamped map only, so every candidate is
  // judged by its residual under f and a stalled zoom returns to the global grid.
  constexpr std::int64_t kZoomGrid = 64;
  std::int64_t m = 16;
  std::optional<Vec> center;
  double zoom_side = 0.0;
  for (int level = 0; level <= options.max_depth; ++level) {
    const bool local = center.has_value();
    Vec base = lo;
    double s = side;
    std::int64_t grid_m = m;
    if (local) {
      s = zoom_side;
      grid_m = kZoomGrid;
      for (std::size_t i = 0; i < d; ++i) base[i] = (*center)[i] - s / static_cast<double>(d + 1);
    }
    const double before = best.residual;
    SpernerLevel grid(f, vertices, base, s, grid_m, best.evaluations);
    auto cell = grid.walk(options.pivot_budget);
    if (cell) {
      Vec bary(d, 0.0);
      for (const auto& v : *cell) {
        const auto& smp = grid.sample(v);
        if (smp.residual < best.residual) {
          best.residual = smp.residual;
          best.point = smp.point;
          best.subdivision = true;
        }
        const Vec x = grid.position(v);
        for (std::size_t i = 0; i < d; ++i) bary[i] += x[i] / static_cast<double>(cell->size());
      }
      const auto smp = grid.evaluate(bary, nullptr);
      if (smp.residual < best.residual) {
        best.residual = smp.residual;
        best.point = smp.point;
        best.subdivision = true;
      }
    }
    if (best.residual <= options.tol) return best;
    if (local) {
      if (cell && best.residual < before) {
        center = best.point;
        zoom_side = s / 8.0;
      } else {
        center.reset();
      }
    } else {
      if (!cell) break;
      m *= 2;
      center = best.point;
      zoom_side = 8.0 * s / static_cast<double>(grid_m);
    }
  }
  throw Error(Errc::NoConvergence, "fixed-point subdivision budget exhausted", {}, best.residual);
}

}  // namespace l0kit::classical
