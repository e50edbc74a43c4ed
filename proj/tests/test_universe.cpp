#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "misere/game.hpp"
#include "misere/notation.hpp"
#include "misere/universe.hpp"

using namespace misere;

namespace {

std::set<GameId> as_set(std::vector<GameId> const& v) { return {v.begin(), v.end()}; }

// Every game of birthday <= b with at most k options per side, built
// naively level by level without any pruning.
std::vector<GameId> all_games(GameStore& s, unsigned b, unsigned k) {
  std::vector<GameId> pool{kZero};
  for (unsigned level = 1; level <= b; ++level) {
    std::vector<std::vector<GameId>> subsets{{}};
    for (std::size_t i = 0; i < pool.size(); ++i) {
      std::size_t const n = subsets.size();
      for (std::size_t j = 0; j < n; ++j) {
        if (subsets[j].size() < k) {
          auto next = subsets[j];
          next.push_back(pool[i]);
          subsets.push_back(next);
        }
      }
    }
    std::set<GameId> out(pool.begin(), pool.end());
    for (auto const& l : subsets) {
      for (auto const& r : subsets) out.insert(s.intern(l, r));
    }
    pool.assign(out.begin(), out.end());
  }
  return pool;
}

}  // namespace

TEST_CASE("descriptors") {
  for (char const* text : {"dead-ending:b3:k2", "dead-ends:b2:k2",
                           "dead-end-closure:b2:k2:t3", "numbers:j3:v2:t3"}) {
    CHECK(Descriptor::parse(text).to_string() == text);
  }
  CHECK(Descriptor::parse("dead-ending:b3:k2") == Descriptor::dead_ending(3, 2));
  CHECK_THROWS_AS(Descriptor::parse("dead-ending:b3"), std::invalid_argument);
  CHECK_THROWS_AS(Descriptor::parse("widgets:b3:k2"), std::invalid_argument);
  CHECK_THROWS_AS(Descriptor::parse("numbers:j3:vx:t3"), std::invalid_argument);
}

TEST_CASE("dead-ending, small birthdays") {
  GameStore s;
  CHECK(gen_dead_ending(s, 0, 2).materialize(s) == std::vector{kZero});

  auto const day1 = as_set(gen_dead_ending(s, 1, 2).materialize(s));
  CHECK(day1 == std::set<GameId>{kZero, s.integer(1), s.integer(-1), s.star()});

  auto const day2 = gen_dead_ending(s, 2, 2).materialize(s);
  GameId const live = s.intern({}, {s.integer(1)});
  CHECK(std::find(day2.begin(), day2.end(), live) == day2.end());
  CHECK(std::find(day2.begin(), day2.end(), s.integer(2)) != day2.end());
}

TEST_CASE("dead-ending matches a naive filter") {
  for (unsigned k : {1u, 2u}) {
    GameStore s;
    std::set<GameId> want;
    for (GameId g : all_games(s, 2, k)) {
      if (s.is_dead_ending(g)) want.insert(g);
    }
    TestSet const t = gen_dead_ending(s, 2, k);
    auto const got = t.materialize(s);
    CHECK(got.size() == t.size());
    CHECK(as_set(got).size() == got.size());
    CHECK(as_set(got) == want);
  }
}

TEST_CASE("dead-ending members are ordered by birthday") {
  GameStore s;
  TestSet const t = gen_dead_ending(s, 3, 2);
  CHECK(t.size() == 33'385'305);
  auto const& base = t.base();
  CHECK(base.size() == 107);
  for (std::size_t i = 1; i < base.size(); ++i) {
    CHECK(s.birthday(base[i - 1]) <= s.birthday(base[i]));
  }
  // A few implicit members, checked against their predicate.
  std::size_t seen = 0;
  for (std::size_t slot = t.top_offset(); slot < t.slot_count() && seen < 200;
       slot += 104729) {
    if (!t.is_member(slot)) continue;
    GameId const g = t.member(s, slot);
    CHECK(s.birthday(g) == 3);
    CHECK(s.is_dead_ending(g));
    CHECK(s.left(g).size() <= 2);
    CHECK(s.right(g).size() <= 2);
    ++seen;
  }
  CHECK(seen > 100);
}

TEST_CASE("generation is deterministic") {
  GameStore a, b;
  TestSet const ta = gen_dead_ending(a, 2, 2);
  TestSet const tb = gen_dead_ending(b, 2, 2);
  auto const ma = ta.materialize(a), mb = tb.materialize(b);
  REQUIRE(ma.size() == mb.size());
  for (std::size_t i = 0; i < ma.size(); ++i) {
    CHECK(render(a, ma[i]) == render(b, mb[i]));
  }
}

TEST_CASE("dead ends") {
  GameStore s;
  TestSet const t = gen_dead_ends(s, 2, 2);
  for (GameId g : t.base()) CHECK(s.is_dead_end(g));
  std::set<GameId> want;
  for (GameId g : all_games(s, 2, 2)) {
    if (s.is_dead_end(g)) want.insert(g);
  }
  CHECK(as_set(t.base()) == want);
}

TEST_CASE("dead-end closure") {
  GameStore s;
  TestSet const t1 = gen_dead_end_closure(s, 2, 2, 1);
  CHECK(as_set(t1.materialize(s)) == as_set(gen_dead_ends(s, 2, 2).base()));

  TestSet const t2 = gen_dead_end_closure(s, 2, 2, 2);
  auto const m2 = as_set(t2.materialize(s));
  CHECK(m2.count(s.sum(s.integer(1), s.integer(-1))) == 1);
  for (GameId g : m2) CHECK(s.is_dead_ending(g));
}

TEST_CASE("number closure") {
  GameStore s;
  TestSet const t1 = gen_number_closure(s, 1, 1, 1);
  std::set<GameId> want{kZero, s.integer(1), s.integer(-1), s.dyadic({1, 1}),
                        s.dyadic({-1, 1})};
  CHECK(as_set(t1.materialize(s)) == want);

  TestSet const t2 = gen_number_closure(s, 1, 1, 2);
  GameId const h = s.dyadic({1, 1});
  CHECK(as_set(t2.materialize(s)).count(s.sum(h, h)) == 1);

  TestSet const t3 = gen_number_closure(s, 3, 2, 3);
  for (GameId g : t3.materialize(s)) CHECK(s.is_dead_ending(g));
}

TEST_CASE("budgets") {
  GameStore s;
  GenerationBudget tight;
  tight.max_slots = 1000;
  CHECK_THROWS_AS(gen_dead_ending(s, 3, 2, tight), BudgetExceeded);
  tight.max_materialized = 10;
  CHECK_THROWS_AS(gen_dead_end_closure(s, 2, 2, 3, tight), BudgetExceeded);
  TestSet const big = gen_dead_ending(s, 3, 2);
  CHECK_THROWS_AS(big.materialize(s, 1000), BudgetExceeded);
}

TEST_CASE("left ends") {
  GameStore s;
  TestSet const t = gen_dead_ending(s, 2, 2);
  auto const ends = t.left_ends(s);
  for (GameId g : ends) CHECK(s.is_left_end(g));
  std::size_t n = 0;
  for (GameId g : t.materialize(s)) n += s.is_left_end(g);
  CHECK(ends.size() == n);
}

TEST_CASE("multisets") {
  std::size_t n = 0;
  for_each_multiset(3, 2, [&](std::vector<std::size_t> const&) { ++n; });
  CHECK(n == 1 + 3 + 6);
}
