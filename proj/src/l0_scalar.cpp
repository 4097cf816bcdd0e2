#include "l0kit/l0_scalar.hpp"

#include <algorithm>
#include <cmath>

namespace l0kit {

RandomScalar::RandomScalar(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw Error(Errc::BadValue, "random scalar without a space");
  if (values_.size() != space_->size())
    throw Error(Errc::BadValue, "random scalar needs one value per atom");
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!std::isfinite(values_[i])) bad.push_back(i);
  if (!bad.empty()) throw Error(Errc::BadValue, "random scalar values must be finite", bad);
}

RandomScalar RandomScalar::constant(SpacePtr space, double value) {
  const std::size_t n = space->size();
  return RandomScalar(std::move(space), std::vector<double>(n, value));
}

RandomScalar RandomScalar::indicator(const Event& event) {
  std::vector<double> v(event.space()->size(), 0.0);
  for (std::size_t a : event.atoms()) v[a] = 1.0;
  return RandomScalar(event.space(), std::move(v));
}

double RandomScalar::min() const { return *std::min_element(values_.begin(), values_.end()); }
double RandomScalar::max() const { return *std::max_element(values_.begin(), values_.end()); }

double RandomScalar::expectation() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) s += space_->weight(i) * values_[i];
  return s;
}

namespace {

template <class Op>
RandomScalar zip(const RandomScalar& a, const RandomScalar& b, Op op) {
  require_same_space(a.space(), b.space());
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
  return RandomScalar(a.space(), std::move(out));
}

}  // namespace

RandomScalar operator+(const RandomScalar& a, const RandomScalar& b) {
  return zip(a, b, [](double x, double y) { return x + y; });
}
RandomScalar operator-(const RandomScalar& a, const RandomScalar& b) {
  return zip(a, b, [](double x, double y) { return x - y; });
}
RandomScalar operator*(const RandomScalar& a, const RandomScalar& b) {
  return zip(a, b, [](double x, double y) { return x * y; });
}
RandomScalar operator*(double c, const RandomScalar& a) {
  std::vector<double> out(a.values_);
  for (double& v : out) v *= c;
  return RandomScalar(a.space_, std::move(out));
}
RandomScalar operator-(const RandomScalar& a) { return -1.0 * a; }

RandomScalar abs(const RandomScalar& x) {
  std::vector<double> out(x.values());
  for (double& v : out) v = std::fabs(v);
  return RandomScalar(x.space(), std::move(out));
}

RandomScalar glue_scalars(const MeasurablePartition& partition, std::span<const RandomScalar> pieces) {
  if (pieces.size() != partition.piece_count())
    throw Error(Errc::PieceCountMismatch, "glue_scalars needs one scalar per piece");
  for (const auto& p : pieces) require_same_space(partition.space(), p.space());
  std::vector<double> out(partition.space()->size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = pieces[partition.label(i)][i];
  return RandomScalar(partition.space(), std::move(out));
}

namespace {

template <class Pick>
RandomScalar fold(std::span<const RandomScalar> family, Pick pick, const char* what) {
  if (family.empty()) throw Error(Errc::EmptyFamily, what);
  std::vector<double> out(family.front().values());
  for (const auto& x : family.subspan(1)) {
    require_same_space(family.front().space(), x.space());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = pick(out[i], x[i]);
  }
  return RandomScalar(family.front().space(), std::move(out));
}

}  // namespace

RandomScalar ess_sup(std::span<const RandomScalar> family) {
  return fold(family, [](double a, double b) { return std::max(a, b); }, "ess_sup of an empty family");
}

RandomScalar ess_inf(std::span<const RandomScalar> family) {
  return fold(family, [](double a, double b) { return std::min(a, b); }, "ess_inf of an empty family");
}

namespace {

bool related(double a, double b, Rel rel) {
  switch (rel) {
    case Rel::Less: return a < b;
    case Rel::LessEq: return a <= b;
    case Rel::Equal: return a == b;
  }
  return false;
}

}  // namespace

Event relation_event(const RandomScalar& lhs, const RandomScalar& rhs, Rel rel) {
  require_same_space(lhs.space(), rhs.space());
  std::vector<std::size_t> atoms;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (related(lhs[i], rhs[i], rel)) atoms.push_back(i);
  return Event(lhs.space(), std::move(atoms));
}

bool holds_on(const RandomScalar& lhs, const RandomScalar& rhs, Rel rel, const Event& on) {
  require_same_space(lhs.space(), rhs.space());
  require_same_space(lhs.space(), on.space());
  return std::all_of(on.atoms().begin(), on.atoms().end(),
                     [&](std::size_t a) { return related(lhs[a], rhs[a], rel); });
}

}  // namespace l0kit
