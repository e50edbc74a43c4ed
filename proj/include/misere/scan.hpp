#ifndef MISERE_SCAN_HPP_
#define MISERE_SCAN_HPP_

// Outcome signatures of a game against every member of a TestSet.
//
// The signature of G records, for every slot X, whether Left wins G + X
// moving first and moving second. Equivalence and order modulo the test
// set are then bitwise comparisons of signatures.
//
// Two implementations are kept:
//   * signature(): the production path. Base members go through the
//     memoized solver; the implicit top layer is evaluated row by row with
//     bitwise recurrences over all right choices at once, parallelized over
//     rows with OpenMP.
//   * signature_reference(): interns every member and every sum and asks
//     the solver, one slot at a time. Serial; used by tests and benchmarks.

#include <cstddef>
#include <memory>
#include <unordered_map>

#include "misere/bitset.hpp"
#include "misere/game.hpp"
#include "misere/outcome.hpp"
#include "misere/universe.hpp"

namespace misere {

struct Signature {
  Bitset left_first;   // Left wins G + X moving first
  Bitset left_second;  // Left wins G + X moving second

  Outcome at(std::size_t slot) const {
    return outcome_from_wins(left_first.test(slot), left_second.test(slot));
  }
  friend bool operator==(Signature const&, Signature const&) = default;
};

class Scanner {
 public:
  Scanner(OutcomeSolver& solver, TestSet const& tests)
      : solver_(solver), tests_(tests) {}

  OutcomeSolver& solver() { return solver_; }
  GameStore& store() { return solver_.store(); }
  TestSet const& tests() const { return tests_; }

  // Cached per game.
  std::shared_ptr<Signature const> signature(GameId g);
  Signature compute_signature(GameId g);
  Signature signature_reference(GameId g);

  // o-(g + member(slot)) by direct interning.
  Outcome outcome_at(GameId g, std::size_t slot);

  void clear_cache() { cache_.clear(); }

 private:
  OutcomeSolver& solver_;
  TestSet const& tests_;
  std::unordered_map<GameId, std::shared_ptr<Signature const>> cache_;
};

// First slot where the two signatures differ, restricted to members.
std::optional<std::size_t> first_difference(Signature const& a,
                                            Signature const& b);
// First slot where o(a) >= o(b) fails.
std::optional<std::size_t> first_geq_failure(Signature const& a,
                                             Signature const& b);

}  // namespace misere

#endif  // MISERE_SCAN_HPP_
