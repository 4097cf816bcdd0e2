#pragma once

// L0(F, R) at finite scale: one finite real per atom, with the atom-wise
// order, lattice operations and gluing along measurable partitions.

#include <span>
#include <vector>

#include "l0kit/prob_space.hpp"

namespace l0kit {

class RandomScalar {
 public:
  /// Rejects non-finite values (extended reals are not a stored type).
  RandomScalar(SpacePtr space, std::vector<double> values);
  static RandomScalar constant(SpacePtr space, double value);
  static RandomScalar indicator(const Event& event);

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t atom) const { return values_[atom]; }
  double at(std::size_t atom) const { return values_.at(atom); }
  const std::vector<double>& values() const noexcept { return values_; }

  double min() const;
  double max() const;
  /// Integral against P.
  double expectation() const;

  friend RandomScalar operator+(const RandomScalar& a, const RandomScalar& b);
  friend RandomScalar operator-(const RandomScalar& a, const RandomScalar& b);
  friend RandomScalar operator*(const RandomScalar& a, const RandomScalar& b);
  friend RandomScalar operator*(double c, const RandomScalar& a);
  friend RandomScalar operator-(const RandomScalar& a);
  friend bool operator==(const RandomScalar& a, const RandomScalar& b) {
    return a.values_ == b.values_;
  }

 private:
  SpacePtr space_;
  std::vector<double> values_;
};

RandomScalar abs(const RandomScalar& x);

/// Piece k of `partition` takes its values from pieces[k].
RandomScalar glue_scalars(const MeasurablePartition& partition, std::span<const RandomScalar> pieces);

RandomScalar ess_sup(std::span<const RandomScalar> family);
RandomScalar ess_inf(std::span<const RandomScalar> family);

enum class Rel { Less, LessEq, Equal };

/// Atoms where `lhs rel rhs` holds; exact floating comparison.
Event relation_event(const RandomScalar& lhs, const RandomScalar& rhs, Rel rel);

/// True iff the relation holds at every atom of `on` (vacuous on the empty event).
bool holds_on(const RandomScalar& lhs, const RandomScalar& rhs, Rel rel, const Event& on);

}  // namespace l0kit
