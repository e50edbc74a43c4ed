#ifndef MISERE_RELATIONS_HPP_
#define MISERE_RELATIONS_HPP_

// Equivalence and order modulo a bounded universe, closed-form number and
// integer comparisons, and misère-monoid quotients.
//
// A bounded scan can refute equivalence or inequality but never prove it
// over an infinite universe, so every positive verdict carries the
// descriptor of the test set it was checked against.

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "misere/game.hpp"
#include "misere/outcome.hpp"
#include "misere/scan.hpp"
#include "misere/universe.hpp"

namespace misere {

struct Witness {
  GameId game;
  std::size_t slot = 0;
  Outcome lhs = Outcome::N;  // o-(G + X)
  Outcome rhs = Outcome::N;  // o-(H + X)
};

struct Distinguished {
  Witness witness;
};
struct IndistinguishableUpTo {
  Descriptor tests;
};
using Verdict = std::variant<Distinguished, IndistinguishableUpTo>;

struct GeqConsistentUpTo {
  Descriptor tests;
};
// G >= H fails at the witness, but H >= G is consistent with the tests.
struct Refuted {
  Witness witness;
};
struct IncomparableWitnessed {
  Witness geq_failure;  // o(G+X) >= o(H+X) fails
  Witness leq_failure;  // o(H+X) >= o(G+X) fails
};
using OrderVerdict =
    std::variant<GeqConsistentUpTo, Refuted, IncomparableWitnessed>;

inline bool is_distinguished(Verdict const& v) {
  return std::holds_alternative<Distinguished>(v);
}

Verdict equiv_mod(Scanner& scanner, GameId g, GameId h);
OrderVerdict geq_mod(Scanner& scanner, GameId g, GameId h);
// equiv_mod(g + conj(g), 0).
Verdict invert_check(Scanner& scanner, GameId g);

// Order evidence over an explicit list of contexts rather than a TestSet.
// Witness slots index into `contexts`; the first failure in list order is
// reported.
struct ContextEvidence {
  std::optional<Witness> geq_failure;
  std::optional<Witness> leq_failure;
  std::size_t checked = 0;
};
ContextEvidence geq_over_contexts(OutcomeSolver& solver, GameId g, GameId h,
                                  std::vector<GameId> const& contexts);

// conj(c) + Y and conj(c) + Q + Y for c in `centers`, Y in {0} + pool and
// Q in `pairs`. Since c + conj(c) is equivalent to zero for numbers and
// dead ends, these contexts isolate how G and H differ from c.
std::vector<GameId> conjugate_contexts(GameStore& store,
                                       std::vector<GameId> const& centers,
                                       std::vector<GameId> const& pool,
                                       std::vector<GameId> const& pairs);

// Explicit contexts separating integers n > m in both directions:
//   not_geq: X with o(n + X) >= o(m + X) failing, namely conj(m);
//   not_leq: X with o(m + X) >= o(n + X) failing, from the lambda family:
//     lambda(n) when m >= 0, ~lambda(-m) when n <= 0, and
//     (-m-1) + lambda(n-m-1) otherwise.
struct IntegerSeparation {
  GameId not_geq;
  GameId not_leq;
};
IntegerSeparation integer_separation(GameStore& store, std::int64_t n,
                                     std::int64_t m);

// Rebuilds the witness sums and re-solves them.
bool witness_replays(OutcomeSolver& solver, GameId g, GameId h,
                     Witness const& w);

enum class Comparison { Equivalent, Greater, Less, Incomparable };
std::string_view comparison_name(Comparison c);

// Closed-form order of canonical numbers modulo the dead-ending universe.
// Same sign: a is strictly greater iff a > b and l(a) <= l(b) (positive) or
// r(b) <= r(a) (negative). Different signs, or zero against nonzero, are
// incomparable.
Comparison compare_numbers_mod_E(NumberLiteral a, NumberLiteral b);

// Integers modulo the closure of dead ends are totally ordered, reversed:
// n < m means n is strictly greater.
Comparison compare_integers_mod_dead_end_closure(std::int64_t n,
                                                 std::int64_t m);

// The integer a dead end reduces to modulo the closure of dead ends:
// l(g) for right ends, -r(g) for left ends. Throws std::invalid_argument
// for anything that is not a dead end.
NumberLiteral reduce_end_to_integer(GameStore& store, GameId g);

struct MonoidClass {
  GameId representative;
  std::vector<GameId> members;  // distinct sums in this class
  std::vector<std::vector<std::size_t>> words;  // generator index multisets
  Outcome outcome = Outcome::N;
  std::optional<std::int64_t> label;  // n when the class matches integer n
};

struct MonoidReport {
  Descriptor tests;
  unsigned max_terms = 0;
  std::vector<GameId> generators;
  std::vector<MonoidClass> classes;
  // product[i][j]: class of rep_i + rep_j when it is one of `classes`.
  std::vector<std::vector<std::optional<std::size_t>>> product;
  // product_label[i][j]: integer n with rep_i + rep_j matching n.
  std::vector<std::vector<std::optional<std::int64_t>>> product_label;
  std::optional<std::size_t> identity;
  std::vector<std::pair<std::size_t, std::size_t>> inverses;
  // order[i][j]: '=' same class, '>' i strictly above j, '<' below,
  // '|' incomparable.
  std::vector<std::vector<char>> order;
};

// Requires the generator list to be closed under conjugation (throws
// std::invalid_argument otherwise).
MonoidReport quotient_monoid(Scanner& scanner,
                             std::vector<GameId> const& generators,
                             unsigned max_terms);

// The integer n (searched in [-range, range]) whose signature equals sig.
std::optional<std::int64_t> match_integer(Scanner& scanner,
                                          Signature const& sig,
                                          std::int64_t range);

}  // namespace misere

#endif  // MISERE_RELATIONS_HPP_
