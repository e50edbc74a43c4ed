#ifndef MISERE_GAME_HPP_
#define MISERE_GAME_HPP_

// Hash-consed short partizan games.
//
// A game is a pair of option sets {G^L | G^R}. Every node lives in a
// GameStore and is identified by a dense GameId; two games with the same
// (recursively interned) option sets always get the same id, so structural
// equality is id equality.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace misere {

struct GameId {
  std::uint32_t value = 0;

  constexpr GameId() = default;
  constexpr explicit GameId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(GameId, GameId) = default;
};

inline constexpr GameId kZero{0};

// A dyadic rational m / 2^j naming a canonical-form number game. The
// representation is always reduced: j == 0, or m is odd.
class NumberLiteral {
 public:
  constexpr NumberLiteral() = default;
  // Reduces (m, j) to lowest terms.
  NumberLiteral(std::int64_t numerator, unsigned exponent);
  static NumberLiteral integer(std::int64_t n) { return {n, 0}; }

  std::int64_t numerator() const { return numerator_; }
  unsigned exponent() const { return exponent_; }
  bool is_integer() const { return exponent_ == 0; }
  int sign() const { return (numerator_ > 0) - (numerator_ < 0); }
  double to_double() const;

  // Options of the canonical form: (m-1)/2^j and (m+1)/2^j for non-integers;
  // n-1 (left, n > 0) and n+1 (right, n < 0) for integers.
  std::optional<NumberLiteral> left_option() const;
  std::optional<NumberLiteral> right_option() const;

  // Consecutive left (right) moves to reach zero, computed on the literal.
  std::optional<unsigned> left_length() const;
  std::optional<unsigned> right_length() const;

  NumberLiteral operator-() const { return {-numerator_, exponent_}; }
  friend NumberLiteral operator+(NumberLiteral a, NumberLiteral b);

  // "3", "-1/2", "5/8".
  std::string to_string() const;

  friend std::strong_ordering operator<=>(NumberLiteral a, NumberLiteral b);
  friend bool operator==(NumberLiteral a, NumberLiteral b) {
    return a.numerator_ == b.numerator_ && a.exponent_ == b.exponent_;
  }

 private:
  std::int64_t numerator_ = 0;
  unsigned exponent_ = 0;
};

// All dyadics m / 2^j with j <= max_exponent and |value| <= max_abs, in
// ascending order.
std::vector<NumberLiteral> dyadics_up_to(unsigned max_exponent,
                                         std::int64_t max_abs);

// The intern store. Append-only; ids are never invalidated.
//
// Not internally synchronized: parallel code reads precomputed tables and
// never calls into a store.
class GameStore {
 public:
  GameStore();

  GameStore(GameStore const&) = delete;
  GameStore& operator=(GameStore const&) = delete;

  // Option lists need not be sorted or duplicate-free; they are normalized.
  GameId intern(std::vector<GameId> left, std::vector<GameId> right);

  std::span<GameId const> left(GameId g) const;
  std::span<GameId const> right(GameId g) const;
  std::size_t size() const { return nodes_.size(); }
  bool contains(GameId g) const { return g.value < nodes_.size(); }

  GameId zero() const { return kZero; }
  GameId integer(std::int64_t n);
  GameId dyadic(NumberLiteral a);
  GameId lambda(unsigned k);
  GameId star();
  GameId conjugate(GameId g);
  GameId sum(GameId g, GameId h);
  GameId sum(std::span<GameId const> terms);

  unsigned birthday(GameId g) const { return nodes_[g.value].birthday; }
  // Reflexive-transitive closure of the option relation, in an order where
  // every game appears after all of its options.
  std::vector<GameId> followers(GameId g) const;

  bool is_left_end(GameId g) const { return left(g).empty(); }
  bool is_right_end(GameId g) const { return right(g).empty(); }
  bool is_dead_left_end(GameId g);
  bool is_dead_right_end(GameId g);
  bool is_dead_end(GameId g) { return is_dead_left_end(g) || is_dead_right_end(g); }
  bool is_dead_ending(GameId g);
  bool is_dicot(GameId g);

  // Shortest path to zero through left (right) options only; empty when
  // zero cannot be reached that way.
  std::optional<unsigned> left_length(GameId g);
  std::optional<unsigned> right_length(GameId g);

 private:
  struct Node {
    std::uint32_t offset;  // into arena_
    std::uint32_t n_left;
    std::uint32_t n_right;
    std::uint32_t birthday;
  };

  // Per-node lazily computed predicate bits.
  enum Flag : std::uint16_t {
    kDeadLeftKnown = 1 << 0,
    kDeadLeft = 1 << 1,
    kDeadRightKnown = 1 << 2,
    kDeadRight = 1 << 3,
    kDeadEndingKnown = 1 << 4,
    kDeadEnding = 1 << 5,
    kDicotKnown = 1 << 6,
    kDicot = 1 << 7,
  };

  struct NodeHash {
    GameStore const* store;
    using is_transparent = void;
    std::size_t operator()(std::uint32_t id) const;
    std::size_t operator()(std::pair<std::span<GameId const>,
                                     std::span<GameId const>> const& key) const;
  };
  struct NodeEq {
    GameStore const* store;
    using is_transparent = void;
    bool operator()(std::uint32_t a, std::uint32_t b) const { return a == b; }
    bool operator()(std::pair<std::span<GameId const>,
                              std::span<GameId const>> const& key,
                    std::uint32_t id) const;
    bool operator()(std::uint32_t id,
                    std::pair<std::span<GameId const>,
                              std::span<GameId const>> const& key) const {
      return (*this)(key, id);
    }
  };

  static std::size_t hash_options(std::span<GameId const> left,
                                  std::span<GameId const> right);

  std::uint16_t& flags(GameId g) { return flags_[g.value]; }
  std::optional<unsigned> side_length(GameId g, bool left_side);

  std::vector<Node> nodes_;
  std::vector<GameId> arena_;
  std::vector<std::uint16_t> flags_;
  std::vector<std::int16_t> left_length_;   // -2 unknown, -1 undefined
  std::vector<std::int16_t> right_length_;
  std::unordered_set<std::uint32_t, NodeHash, NodeEq> index_;
  std::unordered_map<std::uint64_t, std::uint32_t> sum_memo_;
  std::unordered_map<std::uint32_t, std::uint32_t> conjugate_memo_;
  std::unordered_map<std::int64_t, std::uint32_t> integer_memo_;
  std::vector<std::uint32_t> lambda_memo_;
};

}  // namespace misere

template <>
struct std::hash<misere::GameId> {
  std::size_t operator()(misere::GameId g) const noexcept {
    return std::hash<std::uint32_t>{}(g.value);
  }
};

#endif  // MISERE_GAME_HPP_
