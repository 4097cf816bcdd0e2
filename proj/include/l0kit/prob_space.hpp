#pragma once

// Finite base space (Omega, F, P): every atom carries positive mass, so "a.s.",
// "on Omega" and "at every atom" coincide and no null-set bookkeeping exists.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "l0kit/error.hpp"

namespace l0kit {

class FiniteProbSpace;
using SpacePtr = std::shared_ptr<const FiniteProbSpace>;

class FiniteProbSpace {
 public:
  /// Weights are renormalized to sum to one. Throws EmptySpace / DegenerateAtom.
  static SpacePtr make(std::span<const double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  double weight(std::size_t atom) const { return weights_.at(atom); }
  const std::vector<std::string>& atom_ids() const noexcept { return ids_; }

  /// Same atom count and identical weights.
  bool same_as(const FiniteProbSpace& other) const noexcept;

 private:
  explicit FiniteProbSpace(std::vector<double> weights);
  std::vector<double> weights_;
  std::vector<std::string> ids_;
};

SpacePtr make_space(std::span<const double> weights);
inline SpacePtr make_space(std::initializer_list<double> weights) {
  return make_space(std::span<const double>(weights.begin(), weights.size()));
}

/// Throws SpaceMismatch unless both spaces describe the same atoms.
void require_same_space(const SpacePtr& a, const SpacePtr& b);

/// An event as the sorted set of atom indices it contains.
class Event {
 public:
  Event(SpacePtr space, std::vector<std::size_t> atoms);
  static Event empty(SpacePtr space);
  static Event whole(SpacePtr space);
  static Event from_mask(SpacePtr space, const std::vector<bool>& mask);

  const SpacePtr& space() const noexcept { return space_; }
  const std::vector<std::size_t>& atoms() const noexcept { return atoms_; }
  bool contains(std::size_t atom) const;
  bool is_empty() const noexcept { return atoms_.empty(); }
  std::size_t size() const noexcept { return atoms_.size(); }
  double probability() const;
  std::vector<bool> mask() const;

  Event complement() const;
  Event united(const Event& other) const;
  Event intersected(const Event& other) const;

  friend bool operator==(const Event& a, const Event& b) { return a.atoms_ == b.atoms_; }

 private:
  SpacePtr space_;
  std::vector<std::size_t> atoms_;
};

/// Atom -> piece labelling; labels are contiguous 0..piece_count()-1 but their
/// order is the caller's (build_net emits pieces in discovery order).
class MeasurablePartition {
 public:
  MeasurablePartition(SpacePtr space, std::vector<std::size_t> labels);
  static MeasurablePartition trivial(SpacePtr space);

  const SpacePtr& space() const noexcept { return space_; }
  const std::vector<std::size_t>& labels() const noexcept { return labels_; }
  std::size_t label(std::size_t atom) const { return labels_.at(atom); }
  std::size_t piece_count() const noexcept { return pieces_; }
  Event piece(std::size_t k) const;

  /// Relabelled so pieces are numbered in order of first appearance.
  MeasurablePartition canonical() const;
  bool same_pieces(const MeasurablePartition& other) const;

 private:
  SpacePtr space_;
  std::vector<std::size_t> labels_;
  std::size_t pieces_ = 0;
};

MeasurablePartition common_refinement(const MeasurablePartition& p, const MeasurablePartition& q);

/// Union of member sets; exact at finite Omega since every atom has positive mass.
Event essential_sup_events(std::span<const Event> events);
Event essential_inf_events(std::span<const Event> events);

}  // namespace l0kit
