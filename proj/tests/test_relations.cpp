#include <doctest.h>

#include <omp.h>

#include <map>
#include <set>

#include "misere/game.hpp"
#include "misere/notation.hpp"
#include "misere/outcome.hpp"
#include "misere/relations.hpp"
#include "misere/scan.hpp"
#include "misere/universe.hpp"

using namespace misere;

namespace {

// gen_dead_ending(3, 2) is shared: generating it is cheap, but signatures
// against it are cached per scanner.
struct Big {
  GameStore store;
  OutcomeSolver solver{store};
  TestSet tests = gen_dead_ending(store, 3, 2);
  Scanner scanner{solver, tests};
};

Big& big() {
  static Big b;
  return b;
}

GameId game(GameStore& s, char const* text) { return parse_and_elaborate(s, text); }

void check_replays(Scanner& sc, GameId g, GameId h, Witness const& w) {
  CHECK(witness_replays(sc.solver(), g, h, w));
  CHECK(sc.outcome_at(g, w.slot) == w.lhs);
  CHECK(sc.outcome_at(h, w.slot) == w.rhs);
}

}  // namespace

TEST_CASE("equivalence modulo dead-ending games") {
  Big& b = big();
  GameStore& s = b.store;

  Verdict const z = equiv_mod(b.scanner, game(s, "{-1|1}"), kZero);
  REQUIRE(std::holds_alternative<IndistinguishableUpTo>(z));
  CHECK(std::get<IndistinguishableUpTo>(z).tests == Descriptor::dead_ending(3, 2));

  GameId const half = s.dyadic({1, 1}), one = s.integer(1);
  Verdict const d = equiv_mod(b.scanner, half, one);
  REQUIRE(is_distinguished(d));
  Witness const& w = std::get<Distinguished>(d).witness;
  CHECK(w.lhs != w.rhs);
  check_replays(b.scanner, half, one, w);
  // The reported witness is the first differing slot.
  auto const sh = b.scanner.signature(half), so = b.scanner.signature(one);
  for (std::size_t slot = 0; slot < w.slot; ++slot) {
    if (b.tests.is_member(slot)) CHECK(sh->at(slot) == so->at(slot));
  }
}

TEST_CASE("equivalence modulo number sums") {
  GameStore s;
  OutcomeSolver o(s);
  TestSet const t = gen_number_closure(s, 3, 2, 3);
  Scanner sc(o, t);
  GameId const half = s.dyadic({1, 1});
  CHECK_FALSE(is_distinguished(equiv_mod(sc, s.sum(half, half), s.integer(2))));
  CHECK(is_distinguished(equiv_mod(sc, half, s.integer(2))));
}

TEST_CASE("order modulo dead-ending games") {
  Big& b = big();
  GameStore& s = b.store;
  GameId const g = s.lambda(2);
  CHECK(std::holds_alternative<GeqConsistentUpTo>(geq_mod(b.scanner, g, g)));

  OrderVerdict const v = geq_mod(b.scanner, kZero, s.integer(1));
  REQUIRE(std::holds_alternative<IncomparableWitnessed>(v));
  auto const& iw = std::get<IncomparableWitnessed>(v);
  CHECK_FALSE(outcome_geq(iw.geq_failure.lhs, iw.geq_failure.rhs));
  CHECK_FALSE(outcome_geq(iw.leq_failure.rhs, iw.leq_failure.lhs));
  check_replays(b.scanner, kZero, s.integer(1), iw.geq_failure);
  check_replays(b.scanner, kZero, s.integer(1), iw.leq_failure);

  CHECK(std::holds_alternative<GeqConsistentUpTo>(
      geq_mod(b.scanner, s.integer(1), s.dyadic({1, 1}))));
  OrderVerdict const r = geq_mod(b.scanner, s.dyadic({1, 1}), s.integer(1));
  REQUIRE(std::holds_alternative<Refuted>(r));
  check_replays(b.scanner, s.dyadic({1, 1}), s.integer(1), std::get<Refuted>(r).witness);
}

TEST_CASE("inverses") {
  Big& b = big();
  GameStore& s = b.store;
  CHECK_FALSE(is_distinguished(invert_check(b.scanner, s.dyadic({3, 2}))));

  GameId const st = s.star();
  Verdict const v = invert_check(b.scanner, st);
  REQUIRE(is_distinguished(v));
  check_replays(b.scanner, s.sum(st, st), kZero, std::get<Distinguished>(v).witness);

  GameId const g = game(s, "{1|-1}");
  GameId const gg = s.sum(g, s.conjugate(g));
  Verdict const u = invert_check(b.scanner, g);
  REQUIRE(is_distinguished(u));
  check_replays(b.scanner, gg, kZero, std::get<Distinguished>(u).witness);
  // The witness {1|.} distinguishes directly.
  GameId const x = game(s, "{1|.}");
  CHECK(b.solver.misere(s.sum(gg, x)) != b.solver.misere(x));
}

TEST_CASE("closed-form number order") {
  auto cmp = [](NumberLiteral a, NumberLiteral c) { return compare_numbers_mod_E(a, c); };
  CHECK(cmp({1, 1}, {3, 2}) == Comparison::Incomparable);
  CHECK(cmp({1, 0}, {1, 1}) == Comparison::Greater);
  CHECK(cmp({1, 1}, {1, 0}) == Comparison::Less);
  CHECK(cmp({2, 0}, {1, 0}) == Comparison::Incomparable);
  CHECK(cmp({3, 2}, {3, 3}) == Comparison::Greater);
  CHECK(cmp({-3, 3}, {-3, 2}) == Comparison::Greater);
  CHECK(cmp({1, 1}, {1, 1}) == Comparison::Equivalent);
  CHECK(cmp({1, 1}, {-1, 1}) == Comparison::Incomparable);
  CHECK(cmp({0, 0}, {1, 1}) == Comparison::Incomparable);

  auto const lits = dyadics_up_to(3, 2);
  for (NumberLiteral a : lits) {
    for (NumberLiteral c : lits) {
      Comparison const x = cmp(a, c);
      CHECK((x == Comparison::Greater) == (cmp(c, a) == Comparison::Less));
      CHECK((x == Comparison::Greater) == (cmp(-c, -a) == Comparison::Greater));
      CHECK((x == Comparison::Equivalent) == (a == c));
    }
  }
}

TEST_CASE("closed-form integer order") {
  CHECK(compare_integers_mod_dead_end_closure(-1, 0) == Comparison::Greater);
  CHECK(compare_integers_mod_dead_end_closure(1, 1) == Comparison::Equivalent);
  CHECK(compare_integers_mod_dead_end_closure(2, 1) == Comparison::Less);
  CHECK(comparison_name(Comparison::Incomparable) == "incomparable");
}

TEST_CASE("integer order over the dead-end closure") {
  GameStore s;
  OutcomeSolver o(s);
  TestSet const t = gen_dead_end_closure(s, 2, 2, 2);
  Scanner sc(o, t);
  for (std::int64_t n = -2; n <= 2; ++n) {
    for (std::int64_t m = n + 1; m <= 2; ++m) {
      GameId const gn = s.integer(n), gm = s.integer(m);
      CHECK(std::holds_alternative<GeqConsistentUpTo>(geq_mod(sc, gn, gm)));
      CHECK(std::holds_alternative<Refuted>(geq_mod(sc, gm, gn)));
      CHECK(is_distinguished(equiv_mod(sc, gn, gm)));
    }
  }
}

TEST_CASE("integer separation") {
  GameStore s;
  OutcomeSolver o(s);
  for (std::int64_t n = -3; n <= 3; ++n) {
    for (std::int64_t m = -3; m < n; ++m) {
      IntegerSeparation const x = integer_separation(s, n, m);
      GameId const gn = s.integer(n), gm = s.integer(m);
      CHECK_FALSE(outcome_geq(o.misere(s.sum(gn, x.not_geq)), o.misere(s.sum(gm, x.not_geq))));
      CHECK_FALSE(outcome_geq(o.misere(s.sum(gm, x.not_leq)), o.misere(s.sum(gn, x.not_leq))));
      CHECK(s.is_dead_ending(x.not_geq));
      CHECK(s.is_dead_ending(x.not_leq));
    }
  }
  // Left wins n + lambda(n) outright.
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(o.misere(s.sum(s.integer(n), s.lambda(n))) == Outcome::L);
  }
  CHECK_THROWS_AS(integer_separation(s, 1, 1), std::invalid_argument);
}

TEST_CASE("conjugate contexts") {
  GameStore s;
  OutcomeSolver o(s);
  GameId const a = s.dyadic({-15, 3}), c = s.dyadic({15, 3});
  auto const ctx = conjugate_contexts(s, {c, a}, {kZero, s.integer(7)}, {s.lambda(7)});
  CHECK(std::set<GameId>(ctx.begin(), ctx.end()).size() == ctx.size());
  ContextEvidence const e = geq_over_contexts(o, a, c, ctx);
  CHECK(e.checked > 0);
  REQUIRE(e.geq_failure);
  REQUIRE(e.leq_failure);
  GameId const x = ctx[e.geq_failure->slot];
  CHECK(o.misere(s.sum(a, x)) == e.geq_failure->lhs);
  CHECK(witness_replays(o, a, c, *e.leq_failure));
}

TEST_CASE("ends reduce to integers") {
  GameStore s;
  OutcomeSolver o(s);
  CHECK(reduce_end_to_integer(s, game(s, "{0,1|.}")) == NumberLiteral::integer(1));
  CHECK(reduce_end_to_integer(s, s.integer(3)) == NumberLiteral::integer(3));
  CHECK(reduce_end_to_integer(s, s.integer(-2)) == NumberLiteral::integer(-2));
  CHECK_THROWS_AS(reduce_end_to_integer(s, s.star()), std::invalid_argument);

  TestSet const t = gen_dead_end_closure(s, 2, 2, 2);
  Scanner sc(o, t);
  TestSet const ends = gen_dead_ends(s, 2, 2);
  for (GameId g : ends.base()) {
    GameId const n = s.dyadic(reduce_end_to_integer(s, g));
    CHECK_FALSE(is_distinguished(equiv_mod(sc, g, n)));
  }
}

TEST_CASE("property: equivalence relation on a fixed test set") {
  GameStore s;
  OutcomeSolver o(s);
  TestSet const t = gen_dead_ending(s, 2, 2);
  Scanner sc(o, t);
  std::vector<GameId> g;
  for (NumberLiteral a : dyadics_up_to(2, 1)) g.push_back(s.dyadic(a));
  for (char const* e : {"{-1|1}", "*", "*+*", "{0,1|.}", "1+~1", "lambda(1)+~lambda(1)",
                        "{1|-1}", "1/2+1/2", "2"}) {
    g.push_back(game(s, e));
  }
  std::size_t const n = g.size();
  std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) eq[i][j] = !is_distinguished(equiv_mod(sc, g[i], g[j]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(eq[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(eq[i][j] == eq[j][i]);
      for (std::size_t k = 0; k < n; ++k) {
        if (eq[i][j] && eq[j][k]) CHECK(eq[i][k]);
      }
    }
  }
}

TEST_CASE("property: refinement never loses a witness") {
  GameStore s;
  OutcomeSolver o(s);
  TestSet const small = gen_dead_ending(s, 2, 2);
  TestSet const large = gen_dead_ending(s, 3, 2);
  Scanner a(o, small), b(o, large);
  std::vector<GameId> g;
  for (NumberLiteral x : dyadics_up_to(2, 1)) g.push_back(s.dyadic(x));
  g.push_back(s.star());
  g.push_back(s.sum(s.star(), s.star()));
  for (GameId x : g) {
    for (GameId y : g) {
      if (is_distinguished(equiv_mod(a, x, y))) CHECK(is_distinguished(equiv_mod(b, x, y)));
    }
  }
}

TEST_CASE("property: scans do not depend on the thread count") {
  GameStore s;
  OutcomeSolver o(s);
  TestSet const t = gen_dead_ending(s, 3, 2);
  Scanner sc(o, t);
  GameId const g = game(s, "{1|-1}+~{1|-1}");
  int const saved = omp_get_max_threads();
  omp_set_num_threads(1);
  Signature const one = sc.compute_signature(g);
  omp_set_num_threads(std::max(saved, 4));
  Signature const many = sc.compute_signature(g);
  omp_set_num_threads(saved);
  CHECK(one == many);
}

TEST_CASE("integer quotient") {
  GameStore s;
  OutcomeSolver o(s);
  // Products reach labels -8..8; two-summand contexts cannot tell -7 from -8.
  TestSet const t = gen_dead_end_closure(s, 3, 2, 3);
  Scanner sc(o, t);
  std::vector<GameId> gens;
  for (std::int64_t n = -2; n <= 2; ++n) {
    if (n != 0) gens.push_back(s.integer(n));
  }
  MonoidReport const m = quotient_monoid(sc, gens, 2);
  REQUIRE(m.classes.size() == 9);
  std::set<std::int64_t> labels;
  for (auto const& c : m.classes) {
    REQUIRE(c.label);
    labels.insert(*c.label);
    Outcome const want = *c.label == 0 ? Outcome::N : *c.label < 0 ? Outcome::L : Outcome::R;
    CHECK(c.outcome == want);
  }
  CHECK(labels == std::set<std::int64_t>{-4, -3, -2, -1, 0, 1, 2, 3, 4});

  REQUIRE(m.identity);
  auto const& id = m.classes[*m.identity].members;
  CHECK(std::find(id.begin(), id.end(), kZero) != id.end());
  GameId const cancel = s.sum(s.integer(1), s.integer(-1));
  CHECK(std::find(id.begin(), id.end(), cancel) != id.end());

  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      std::int64_t const li = *m.classes[i].label, lj = *m.classes[j].label;
      CHECK(m.product_label[i][j] == li + lj);
      CHECK(m.product_label[i][j] == m.product_label[j][i]);
      if (i != j) CHECK(m.order[i][j] == (li < lj ? '>' : '<'));
    }
  }
  CHECK(m.inverses.size() >= 4);

  // Alternate representatives give the same products.
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      auto const p = m.product[i][j];
      if (!p) continue;
      GameId const x = m.classes[i].members.back(), y = m.classes[j].members.back();
      GameId const rep = s.sum(m.classes[i].representative, m.classes[j].representative);
      CHECK_FALSE(is_distinguished(equiv_mod(sc, s.sum(x, y), rep)));
    }
  }
}

TEST_CASE("dyadic quotient has the integer shape") {
  GameStore s;
  OutcomeSolver o(s);
  TestSet const t = gen_number_closure(s, 3, 2, 3);
  Scanner sc(o, t);
  std::vector<GameId> gens;
  for (NumberLiteral a : dyadics_up_to(2, 1)) {
    if (a.sign() != 0) gens.push_back(s.dyadic(a));
  }
  MonoidReport const m = quotient_monoid(sc, gens, 2);
  REQUIRE(m.classes.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) {
    REQUIRE(m.classes[i].label);
    for (std::size_t j = 0; j < 9; ++j) {
      CHECK(m.product_label[i][j] == *m.classes[i].label + *m.classes[j].label);
    }
  }
  CHECK_THROWS_AS(quotient_monoid(sc, {s.integer(1)}, 2), std::invalid_argument);
}
