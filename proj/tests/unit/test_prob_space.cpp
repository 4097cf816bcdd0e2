#include <doctest.h>

#include <map>
#include <random>
#include <utility>

#include "l0kit/prob_space.hpp"

using namespace l0kit;

namespace {

// Pair-enumeration reference: atoms share a piece iff their (p, q) label pairs match.
std::vector<std::size_t> refine_by_pairs(const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    auto [it, fresh] = ids.emplace(std::make_pair(p[a], q[a]), ids.size());
    out.push_back(it->second);
  }
  return out;
}

MeasurablePartition random_partition(const SpacePtr& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, s->size() - 1);
  std::vector<std::size_t> raw(s->size());
  for (auto& l : raw) l = pick(rng);
  return MeasurablePartition(s, refine_by_pairs(raw, raw));
}

}  // namespace

TEST_CASE("make_space normalizes weights") {
  auto s = make_space({0.5, 0.5});
  CHECK(s->size() == 2);
  CHECK(s->weight(0) == doctest::Approx(0.5));
  auto one = make_space({1.0});
  CHECK(one->size() == 1);
  CHECK(one->weight(0) == 1.0);
  auto skew = make_space({2.0, 6.0});
  CHECK(skew->weight(0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(skew->weight(1) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(skew->atom_ids().size() == 2);
}

TEST_CASE("make_space rejects degenerate input") {
  std::vector<double> none;
  try {
    make_space(none);
    FAIL("expected EmptySpace");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptySpace);
  }
  for (double w : {0.0, -1.0}) {
    try {
      make_space({1.0, w});
      FAIL("expected DegenerateAtom");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DegenerateAtom);
    }
  }
}

TEST_CASE("common_refinement examples") {
  auto s = make_space({1, 1, 1});
  MeasurablePartition p(s, {0, 0, 1}), q(s, {0, 1, 1});
  auto r = common_refinement(p, q);
  CHECK(r.same_pieces(MeasurablePartition(s, refine_by_pairs(p.labels(), q.labels()))));
  CHECK(r.canonical().labels() == std::vector<std::size_t>{0, 1, 2});
  CHECK(common_refinement(MeasurablePartition::trivial(s), q).same_pieces(q));
  CHECK(common_refinement(p, p).same_pieces(p));
}

TEST_CASE("common_refinement rejects foreign spaces") {
  auto s = make_space({1, 1});
  auto t = make_space({1, 2});
  CHECK_THROWS_AS(common_refinement(MeasurablePartition::trivial(s), MeasurablePartition::trivial(t)), Error);
}

TEST_CASE("common_refinement is associative and commutative on random partitions") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto s = make_space(std::vector<double>(1 + t % 7, 1.0));
    auto p = random_partition(s, rng), q = random_partition(s, rng), r = random_partition(s, rng);
    CHECK(common_refinement(p, q).same_pieces(common_refinement(q, p)));
    CHECK(common_refinement(common_refinement(p, q), r).same_pieces(common_refinement(p, common_refinement(q, r))));
    CHECK(common_refinement(p, q).same_pieces(MeasurablePartition(s, refine_by_pairs(p.labels(), q.labels()))));
  }
}

TEST_CASE("essential supremum of events is the union") {
  auto s = make_space({1, 1, 1});
  std::vector<Event> two{Event(s, {0}), Event(s, {1})};
  CHECK(essential_sup_events(two) == Event(s, {0, 1}));
  std::vector<Event> empties{Event::empty(s), Event::empty(s)};
  CHECK(essential_sup_events(empties).is_empty());
  std::vector<Event> three{Event(s, {0}), Event(s, {0, 1}), Event(s, {1, 2})};
  CHECK(essential_sup_events(three) == Event::whole(s));
  std::vector<Event> none;
  CHECK_THROWS_AS(essential_sup_events(none), Error);
  CHECK(essential_inf_events(three).is_empty());
}

TEST_CASE("essential supremum distributes over concatenated families") {
  std::mt19937_64 rng(5);
  auto s = make_space(std::vector<double>(6, 1.0));
  std::bernoulli_distribution coin(0.3);
  for (int t = 0; t < 100; ++t) {
    std::vector<Event> e, f;
    for (int k = 0; k < 3; ++k) {
      std::vector<bool> m1(6), m2(6);
      for (int a = 0; a < 6; ++a) m1[a] = coin(rng), m2[a] = coin(rng);
      e.push_back(Event::from_mask(s, m1));
      f.push_back(Event::from_mask(s, m2));
    }
    std::vector<Event> both = e;
    both.insert(both.end(), f.begin(), f.end());
    CHECK(essential_sup_events(both) == essential_sup_events(e).united(essential_sup_events(f)));
  }
}

TEST_CASE("events carry probability") {
  auto s = make_space({1, 3});
  CHECK(Event(s, {1}).probability() == doctest::Approx(0.75));
  CHECK(Event(s, {0}).complement() == Event(s, {1}));
  CHECK(MeasurablePartition(s, {1, 0}).piece(1) == Event(s, {0}));
}
