#include "misere/outcome.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace misere {

std::string_view outcome_name(Outcome o, Play play) {
  bool const m = play == Play::Misere;
  switch (o) {
    case Outcome::L: return m ? "L-" : "L+";
    case Outcome::N: return m ? "N-" : "N+";
    case Outcome::P: return m ? "P-" : "P+";
    case Outcome::R: return m ? "R-" : "R+";
  }
  return "?";
}

char outcome_letter(Outcome o) {
  switch (o) {
    case Outcome::L: return 'L';
    case Outcome::N: return 'N';
    case Outcome::P: return 'P';
    case Outcome::R: return 'R';
  }
  return '?';
}

std::uint8_t& OutcomeSolver::slot(GameId g, Play play) {
  auto& memo = play == Play::Misere ? misere_memo_ : normal_memo_;
  if (memo.size() <= g.value) {
    memo.resize(std::max<std::size_t>(store_.size(), g.value + 1), 0);
  }
  return memo[g.value];
}

bool OutcomeSolver::left_first_wins(GameId g, Play play) {
  if (std::uint8_t const s = slot(g, play); s & kLeftKnown) {
    return s & kLeftWins;
  }
  auto const opts = store_.left(g);
  // Misère: a player with no move wins; normal: loses.
  bool wins = opts.empty() ? play == Play::Misere : false;
  for (GameId x : opts) {
    if (!right_first_wins(x, play)) {
      wins = true;
      break;
    }
  }
  slot(g, play) |= kLeftKnown | (wins ? kLeftWins : 0);
  return wins;
}

bool OutcomeSolver::right_first_wins(GameId g, Play play) {
  if (std::uint8_t const s = slot(g, play); s & kRightKnown) {
    return s & kRightWins;
  }
  auto const opts = store_.right(g);
  bool wins = opts.empty() ? play == Play::Misere : false;
  for (GameId x : opts) {
    if (!left_first_wins(x, play)) {
      wins = true;
      break;
    }
  }
  slot(g, play) |= kRightKnown | (wins ? kRightWins : 0);
  return wins;
}

Outcome OutcomeSolver::outcome(GameId g, Play play) {
  return outcome_from_wins(left_first_wins(g, play),
                           !right_first_wins(g, play));
}

bool normal_geq(OutcomeSolver& solver, GameId g, GameId h) {
  GameStore& store = solver.store();
  GameId const diff = store.sum(g, store.conjugate(h));
  Outcome const o = solver.normal(diff);
  return o == Outcome::L || o == Outcome::P;
}

Outcome dead_end_sum_outcome(GameStore& store, GameId g, GameId h) {
  if (!store.is_dead_right_end(g)) {
    throw std::invalid_argument("dead_end_sum_outcome: first argument is not a dead right end");
  }
  if (!store.is_dead_left_end(h)) {
    throw std::invalid_argument("dead_end_sum_outcome: second argument is not a dead left end");
  }
  // Both lengths exist: every left path in a dead right end ends at zero.
  unsigned const lg = *store.left_length(g);
  unsigned const rh = *store.right_length(h);
  if (lg == rh) return Outcome::N;
  return lg < rh ? Outcome::L : Outcome::R;
}

Outcome number_sum_outcome(std::span<NumberLiteral const> terms) {
  std::int64_t k = 0;
  for (NumberLiteral const& a : terms) {
    if (a.sign() == 0) {
      throw std::invalid_argument("number_sum_outcome: zero term");
    }
    if (a.sign() > 0) {
      k += *a.left_length();
    } else {
      k -= *a.right_length();
    }
  }
  if (k == 0) return Outcome::N;
  return k < 0 ? Outcome::L : Outcome::R;
}

}  // namespace misere
