#include "l0kit/prob_space.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace l0kit {

FiniteProbSpace::FiniteProbSpace(std::vector<double> weights) : weights_(std::move(weights)) {
  ids_.reserve(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) ids_.push_back("w" + std::to_string(i));
}

SpacePtr FiniteProbSpace::make(std::span<const double> weights) {
  if (weights.empty()) throw Error(Errc::EmptySpace, "a probability space needs at least one atom");
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) bad.push_back(i);
  }
  if (!bad.empty()) throw Error(Errc::DegenerateAtom, "atom weights must be finite and positive", bad);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<double> normalized(weights.begin(), weights.end());
  for (double& w : normalized) w /= total;
  return SpacePtr(new FiniteProbSpace(std::move(normalized)));
}

bool FiniteProbSpace::same_as(const FiniteProbSpace& other) const noexcept {
  return this == &other || weights_ == other.weights_;
}

SpacePtr make_space(std::span<const double> weights) { return FiniteProbSpace::make(weights); }

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (!a || !b || !a->same_as(*b)) throw Error(Errc::SpaceMismatch, "operands live on different spaces");
}

// ---------------------------------------------------------------- Event

Event::Event(SpacePtr space, std::vector<std::size_t> atoms)
    : space_(std::move(space)), atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  if (!atoms_.empty() && atoms_.back() >= space_->size())
    throw Error(Errc::BadValue, "event references an atom outside the space");
}

Event Event::empty(SpacePtr space) { return Event(std::move(space), {}); }

Event Event::whole(SpacePtr space) {
  std::vector<std::size_t> all(space->size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Event(std::move(space), std::move(all));
}

Event Event::from_mask(SpacePtr space, const std::vector<bool>& mask) {
  if (mask.size() != space->size()) throw Error(Errc::BadValue, "mask length differs from atom count");
  std::vector<std::size_t> atoms;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) atoms.push_back(i);
  return Event(std::move(space), std::move(atoms));
}

bool Event::contains(std::size_t atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

double Event::probability() const {
  double p = 0.0;
  for (std::size_t a : atoms_) p += space_->weight(a);
  return p;
}

std::vector<bool> Event::mask() const {
  std::vector<bool> m(space_->size(), false);
  for (std::size_t a : atoms_) m[a] = true;
  return m;
}

Event Event::complement() const {
  auto m = mask();
  m.flip();
  return from_mask(space_, m);
}

Event Event::united(const Event& other) const {
  require_same_space(space_, other.space_);
  std::vector<std::size_t> out;
  std::set_union(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end(),
                 std::back_inserter(out));
  return Event(space_, std::move(out));
}

Event Event::intersected(const Event& other) const {
  require_same_space(space_, other.space_);
  std::vector<std::size_t> out;
  std::set_intersection(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end(),
                        std::back_inserter(out));
  return Event(space_, std::move(out));
}

// ---------------------------------------------------------------- partitions

MeasurablePartition::MeasurablePartition(SpacePtr space, std::vector<std::size_t> labels)
    : space_(std::move(space)), labels_(std::move(labels)) {
  if (labels_.size() != space_->size())
    throw Error(Errc::BadValue, "partition needs exactly one label per atom");
  if (labels_.empty()) return;
  pieces_ = *std::max_element(labels_.begin(), labels_.end()) + 1;
  std::vector<bool> used(pieces_, false);
  for (std::size_t l : labels_) used[l] = true;
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw Error(Errc::BadValue, "partition labels must be contiguous from 0");
}

MeasurablePartition MeasurablePartition::trivial(SpacePtr space) {
  std::vector<std::size_t> labels(space->size(), 0);
  return MeasurablePartition(std::move(space), std::move(labels));
}

Event MeasurablePartition::piece(std::size_t k) const {
  std::vector<std::size_t> atoms;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == k) atoms.push_back(i);
  return Event(space_, std::move(atoms));
}

MeasurablePartition MeasurablePartition::canonical() const {
  std::map<std::size_t, std::size_t> relabel;
  std::vector<std::size_t> out(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = relabel.try_emplace(labels_[i], relabel.size());
    out[i] = it->second;
  }
  return MeasurablePartition(space_, std::move(out));
}

bool MeasurablePartition::same_pieces(const MeasurablePartition& other) const {
  return space_->same_as(*other.space_) && canonical().labels_ == other.canonical().labels_;
}

MeasurablePartition common_refinement(const MeasurablePartition& p, const MeasurablePartition& q) {
  require_same_space(p.space(), q.space());
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pieces;
  std::vector<std::size_t> labels(p.labels().size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = pieces.try_emplace({p.label(i), q.label(i)}, pieces.size());
    labels[i] = it->second;
  }
  return MeasurablePartition(p.space(), std::move(labels));
}

Event essential_sup_events(std::span<const Event> events) {
  if (events.empty()) throw Error(Errc::EmptyFamily, "essential supremum of an empty family of events");
  Event acc = events.front();
  for (const Event& e : events.subspan(1)) acc = acc.united(e);
  return acc;
}

Event essential_inf_events(std::span<const Event> events) {
  if (events.empty()) throw Error(Errc::EmptyFamily, "essential infimum of an empty family of events");
  Event acc = events.front();
  for (const Event& e : events.subspan(1)) acc = acc.intersected(e);
  return acc;
}

}  // namespace l0kit
