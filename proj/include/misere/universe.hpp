#ifndef MISERE_UNIVERSE_HPP_
#define MISERE_UNIVERSE_HPP_

// Bounded, reproducible slices of game universes used as distinguishing
// contexts.
//
// A TestSet has two parts:
//   * base: materialized members, sorted by (birthday, GameId);
//   * top:  an optional implicit layer of games {A | B} whose option sets
//           A and B are drawn from a shared list of subsets of base.
// The implicit layer keeps the birthday-B slice of the dead-ending universe
// tractable: at B=3, K=2 it holds about 33 million games, far too many to
// intern, but it is scanned with word-parallel kernels (see scan.hpp).
//
// Members are addressed by slot. Base member i is slot i; the top member
// with left choice r and right choice c is slot top_offset + r*stride + c.
// Slot order is the deterministic witness order: ascending birthday, then
// GameId within base, then (r, c) in the top layer.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "misere/bitset.hpp"
#include "misere/game.hpp"

namespace misere {

enum class UniverseKind {
  DeadEnding,      // "dead-ending:bB:kK"
  DeadEnds,        // "dead-ends:bB:kK"
  DeadEndClosure,  // "dead-end-closure:bB:kK:tT"
  Numbers,         // "numbers:jJ:vV:tT"
};

struct Descriptor {
  UniverseKind kind = UniverseKind::DeadEnding;
  unsigned birthday = 0;   // b
  unsigned options = 0;    // k
  unsigned terms = 0;      // t
  unsigned exponent = 0;   // j
  std::int64_t value = 0;  // v

  static Descriptor dead_ending(unsigned b, unsigned k) {
    return {UniverseKind::DeadEnding, b, k, 0, 0, 0};
  }
  static Descriptor dead_ends(unsigned b, unsigned k) {
    return {UniverseKind::DeadEnds, b, k, 0, 0, 0};
  }
  static Descriptor dead_end_closure(unsigned b, unsigned k, unsigned t) {
    return {UniverseKind::DeadEndClosure, b, k, t, 0, 0};
  }
  static Descriptor numbers(unsigned j, std::int64_t v, unsigned t) {
    return {UniverseKind::Numbers, 0, 0, t, j, v};
  }

  std::string to_string() const;
  // Throws std::invalid_argument on malformed text.
  static Descriptor parse(std::string_view text);

  friend bool operator==(Descriptor const&, Descriptor const&) = default;
};

// Raised when a generator would exceed its resource budget. The message
// names the bound.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenerationBudget {
  std::size_t max_materialized = 2'000'000;
  std::size_t max_slots = std::size_t{1} << 28;
};

struct TopLayer {
  // Option subsets, as sorted indices into base. Shared by both sides.
  std::vector<std::vector<std::uint32_t>> choices;
  std::size_t stride = 0;  // row length in slots, a multiple of 64
  std::size_t rows() const { return choices.size(); }
};

class TestSet {
 public:
  TestSet(Descriptor descriptor, std::vector<GameId> base,
          std::optional<TopLayer> top, Bitset top_valid);

  Descriptor const& descriptor() const { return descriptor_; }
  std::vector<GameId> const& base() const { return base_; }
  std::optional<TopLayer> const& top() const { return top_; }

  std::size_t size() const { return size_; }
  std::size_t slot_count() const { return mask_.size(); }
  std::size_t top_offset() const { return top_offset_; }
  // Bit per slot, set for slots that hold a member.
  Bitset const& mask() const { return mask_; }
  bool is_member(std::size_t slot) const {
    return slot < mask_.size() && mask_.test(slot);
  }

  // The member in a slot; interns implicit members on demand.
  GameId member(GameStore& store, std::size_t slot) const;

  // Every member as a GameId, in slot order. Throws BudgetExceeded when the
  // implicit layer is larger than `limit`.
  std::vector<GameId> materialize(GameStore& store,
                                  std::size_t limit = 1'000'000) const;

  // Members with no left options, in slot order.
  std::vector<GameId> left_ends(GameStore& store) const;

 private:
  Descriptor descriptor_;
  std::vector<GameId> base_;
  std::optional<TopLayer> top_;
  std::size_t top_offset_ = 0;
  Bitset mask_;
  std::size_t size_ = 0;
};

// All dead-ending games of birthday <= b with at most k options per side
// (at every follower).
TestSet gen_dead_ending(GameStore& store, unsigned b, unsigned k,
                        GenerationBudget const& budget = {});

// All dead left and right ends of birthday <= b with at most k options per
// side. Fully materialized.
TestSet gen_dead_ends(GameStore& store, unsigned b, unsigned k,
                      GenerationBudget const& budget = {});

// All sums of at most t dead ends from gen_dead_ends(b, k).
TestSet gen_dead_end_closure(GameStore& store, unsigned b, unsigned k,
                             unsigned t, GenerationBudget const& budget = {});

// All sums of at most t canonical numbers m/2^j with j <= max_j and
// |value| <= max_abs.
TestSet gen_number_closure(GameStore& store, unsigned max_j,
                           std::int64_t max_abs, unsigned t,
                           GenerationBudget const& budget = {});

TestSet make_test_set(GameStore& store, Descriptor const& d,
                      GenerationBudget const& budget = {});

// Calls f(indices) for every non-decreasing index sequence of length
// 0..max_len over [0, n).
template <typename F>
void for_each_multiset(std::size_t n, unsigned max_len, F&& f) {
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    f(static_cast<std::vector<std::size_t> const&>(idx));
    if (idx.size() == max_len) return;
    for (std::size_t i = start; i < n; ++i) {
      idx.push_back(i);
      self(self, i);
      idx.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace misere

#endif  // MISERE_UNIVERSE_HPP_
