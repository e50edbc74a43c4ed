#ifndef MISERE_OUTCOME_HPP_
#define MISERE_OUTCOME_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "misere/game.hpp"

namespace misere {

// Outcome classes. Left prefers L over N and P, both of which she prefers
// over R; N and P are incomparable.
enum class Outcome : std::uint8_t { L, N, P, R };

// Encodes an outcome as the pair (Left wins moving first, Left wins moving
// second). The partial order on outcomes is the product order on this pair.
constexpr Outcome outcome_from_wins(bool left_first, bool left_second) {
  if (left_first) return left_second ? Outcome::L : Outcome::N;
  return left_second ? Outcome::P : Outcome::R;
}
constexpr bool left_wins_first(Outcome o) {
  return o == Outcome::L || o == Outcome::N;
}
constexpr bool left_wins_second(Outcome o) {
  return o == Outcome::L || o == Outcome::P;
}

constexpr bool outcome_geq(Outcome a, Outcome b) {
  return (left_wins_first(a) || !left_wins_first(b)) &&
         (left_wins_second(a) || !left_wins_second(b));
}

// L <-> R, N and P fixed.
constexpr Outcome swap_sides(Outcome o) {
  return outcome_from_wins(!left_wins_second(o), !left_wins_first(o));
}

enum class Play : std::uint8_t { Misere, Normal };

// "L-", "N+", ... ; the suffix marks the play convention.
std::string_view outcome_name(Outcome o, Play play = Play::Misere);
char outcome_letter(Outcome o);

// Memoized outcome solver over a GameStore. The solver never interns; it
// may be used while the store keeps growing.
class OutcomeSolver {
 public:
  explicit OutcomeSolver(GameStore& store) : store_(store) {}

  GameStore& store() { return store_; }

  Outcome misere(GameId g) { return outcome(g, Play::Misere); }
  Outcome normal(GameId g) { return outcome(g, Play::Normal); }
  Outcome outcome(GameId g, Play play);

  bool left_first_wins(GameId g, Play play = Play::Misere);
  bool right_first_wins(GameId g, Play play = Play::Misere);

 private:
  enum : std::uint8_t {
    kLeftKnown = 1,
    kLeftWins = 2,
    kRightKnown = 4,
    kRightWins = 8,
  };
  std::uint8_t& slot(GameId g, Play play);

  GameStore& store_;
  std::vector<std::uint8_t> misere_memo_;
  std::vector<std::uint8_t> normal_memo_;
};

// Normal-play comparison: o+(g + conj(h)) is L or P.
bool normal_geq(OutcomeSolver& solver, GameId g, GameId h);

// Closed-form misère outcome of a dead right end plus a dead left end:
// N if l(g) = r(h), L if l(g) < r(h), R if l(g) > r(h).
// Throws std::invalid_argument when g or h does not have the required shape.
Outcome dead_end_sum_outcome(GameStore& store, GameId g, GameId h);

// Closed-form misère outcome of a sum of number games, from the literals
// alone: with k = sum of left-lengths of the positive terms minus sum of
// right-lengths of the negative terms, L if k < 0, N if k = 0, R if k > 0.
// Zero terms are rejected.
Outcome number_sum_outcome(std::span<NumberLiteral const> terms);

}  // namespace misere

#endif  // MISERE_OUTCOME_HPP_
