#include <doctest.h>

#include <vector>

#include "misere/game.hpp"
#include "misere/outcome.hpp"
#include "misere/universe.hpp"

using namespace misere;

TEST_CASE("misere outcomes") {
  GameStore s;
  OutcomeSolver o(s);
  CHECK(o.misere(kZero) == Outcome::N);
  CHECK(o.misere(s.integer(1)) == Outcome::R);
  CHECK(o.misere(s.integer(-1)) == Outcome::L);
  CHECK(o.misere(s.intern({}, {s.integer(1)})) == Outcome::N);
  CHECK(o.misere(s.star()) == Outcome::P);
}

TEST_CASE("normal outcomes") {
  GameStore s;
  OutcomeSolver o(s);
  CHECK(o.normal(kZero) == Outcome::P);
  CHECK(o.normal(s.integer(1)) == Outcome::L);
  CHECK(o.normal(s.star()) == Outcome::N);
}

TEST_CASE("outcome names") {
  CHECK(outcome_name(Outcome::N) == "N-");
  CHECK(outcome_name(Outcome::L, Play::Normal) == "L+");
}

TEST_CASE("normal_geq") {
  GameStore s;
  OutcomeSolver o(s);
  CHECK(normal_geq(o, s.integer(1), kZero));
  CHECK_FALSE(normal_geq(o, s.dyadic({1, 1}), s.dyadic({3, 2})));
  GameId const g = s.lambda(2);
  CHECK(normal_geq(o, g, g));
}

TEST_CASE("outcome order") {
  CHECK(outcome_geq(Outcome::L, Outcome::N));
  CHECK_FALSE(outcome_geq(Outcome::N, Outcome::P));
  CHECK_FALSE(outcome_geq(Outcome::P, Outcome::N));
  CHECK(outcome_geq(Outcome::R, Outcome::R));
  CHECK(outcome_geq(Outcome::L, Outcome::R));
  CHECK(outcome_geq(Outcome::P, Outcome::R));
  CHECK_FALSE(outcome_geq(Outcome::R, Outcome::N));
  CHECK(swap_sides(Outcome::L) == Outcome::R);
  CHECK(swap_sides(Outcome::N) == Outcome::N);
  CHECK(swap_sides(Outcome::P) == Outcome::P);
}

TEST_CASE("dead end sums") {
  GameStore s;
  OutcomeSolver o(s);
  CHECK(dead_end_sum_outcome(s, s.integer(1), s.integer(-2)) == Outcome::L);
  CHECK(dead_end_sum_outcome(s, s.integer(2), s.integer(-2)) == Outcome::N);
  CHECK(dead_end_sum_outcome(s, s.integer(2), s.integer(-1)) == Outcome::R);
  CHECK(o.misere(s.sum(s.integer(2), s.integer(-1))) == Outcome::R);
  CHECK_THROWS_AS(dead_end_sum_outcome(s, s.integer(-1), s.integer(-1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(dead_end_sum_outcome(s, s.integer(1), s.star()),
                  std::invalid_argument);
}

TEST_CASE("number sums") {
  using V = std::vector<NumberLiteral>;
  CHECK(number_sum_outcome(V{{1, 1}, {-1, 1}}) == Outcome::N);
  CHECK(number_sum_outcome(V{{3, 2}, {-1, 1}}) == Outcome::R);
  CHECK(number_sum_outcome(V{}) == Outcome::N);
  CHECK(number_sum_outcome(V{{1, 1}, {1, 1}}) == Outcome::R);
  CHECK_THROWS_AS(number_sum_outcome(V{{0, 0}}), std::invalid_argument);

  GameStore s;
  OutcomeSolver o(s);
  GameId const h = s.dyadic({1, 1});
  CHECK(o.misere(s.sum(h, h)) == Outcome::R);
}

TEST_CASE("property: solver matches the dead-end formula") {
  GameStore s;
  OutcomeSolver o(s);
  TestSet const ends = gen_dead_ends(s, 3, 2);
  std::vector<GameId> rights, lefts;
  for (GameId g : ends.base()) {
    if (s.is_dead_right_end(g)) rights.push_back(g);
    if (s.is_dead_left_end(g)) lefts.push_back(g);
  }
  REQUIRE(rights.size() > 5);
  for (GameId g : rights) {
    for (GameId h : lefts) {
      CHECK(o.misere(s.sum(g, h)) == dead_end_sum_outcome(s, g, h));
    }
  }
}

TEST_CASE("property: solver matches the number-sum formula") {
  GameStore s;
  OutcomeSolver o(s);
  std::vector<NumberLiteral> lits;
  for (NumberLiteral a : dyadics_up_to(2, 2)) {
    if (a.sign() != 0) lits.push_back(a);
  }
  for_each_multiset(lits.size(), 3, [&](std::vector<std::size_t> const& idx) {
    std::vector<NumberLiteral> terms;
    std::vector<GameId> games;
    for (std::size_t i : idx) {
      terms.push_back(lits[i]);
      games.push_back(s.dyadic(lits[i]));
    }
    CHECK(o.misere(s.sum(games)) == number_sum_outcome(terms));
  });
}

TEST_CASE("property: conjugation swaps L and R") {
  GameStore s;
  OutcomeSolver o(s);
  TestSet const t = gen_dead_ending(s, 2, 2);
  for (GameId g : t.materialize(s)) {
    CHECK(o.misere(s.conjugate(g)) == swap_sides(o.misere(g)));
    CHECK(o.normal(s.conjugate(g)) == swap_sides(o.normal(g)));
  }
}

TEST_CASE("property: nonzero dead ends and left ends") {
  GameStore s;
  OutcomeSolver o(s);
  TestSet const t = gen_dead_ending(s, 2, 2);
  for (GameId g : t.materialize(s)) {
    if (g == kZero) continue;
    if (s.is_dead_left_end(g)) CHECK(o.misere(g) == Outcome::L);
    if (s.is_dead_right_end(g)) CHECK(o.misere(g) == Outcome::R);
    if (s.is_left_end(g)) CHECK(left_wins_first(o.misere(g)));
  }
}
