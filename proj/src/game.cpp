#include "misere/game.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace misere {

// ---------------------------------------------------------------------------
// NumberLiteral
// ---------------------------------------------------------------------------

NumberLiteral::NumberLiteral(std::int64_t numerator, unsigned exponent)
    : numerator_(numerator), exponent_(exponent) {
  if (numerator_ == 0) {
    exponent_ = 0;
  }
  while (exponent_ > 0 && numerator_ % 2 == 0) {
    numerator_ /= 2;
    --exponent_;
  }
  if (exponent_ > 62) {
    throw std::out_of_range("dyadic exponent too large: " +
                            std::to_string(exponent_));
  }
}

double NumberLiteral::to_double() const {
  return static_cast<double>(numerator_) /
         static_cast<double>(std::int64_t{1} << exponent_);
}

std::optional<NumberLiteral> NumberLiteral::left_option() const {
  if (is_integer()) {
    if (numerator_ > 0) {
      return NumberLiteral(numerator_ - 1, 0);
    }
    return std::nullopt;
  }
  return NumberLiteral(numerator_ - 1, exponent_);
}

std::optional<NumberLiteral> NumberLiteral::right_option() const {
  if (is_integer()) {
    if (numerator_ < 0) {
      return NumberLiteral(numerator_ + 1, 0);
    }
    return std::nullopt;
  }
  return NumberLiteral(numerator_ + 1, exponent_);
}

std::optional<unsigned> NumberLiteral::left_length() const {
  if (numerator_ == 0) {
    return 0u;
  }
  if (numerator_ < 0) {
    return std::nullopt;  // every left path ends at a negative integer
  }
  if (is_integer()) {
    return static_cast<unsigned>(numerator_);
  }
  return 1 + *left_option()->left_length();
}

std::optional<unsigned> NumberLiteral::right_length() const {
  return (-*this).left_length();
}

NumberLiteral operator+(NumberLiteral a, NumberLiteral b) {
  unsigned const j = std::max(a.exponent_, b.exponent_);
  std::int64_t const ma = a.numerator_ * (std::int64_t{1} << (j - a.exponent_));
  std::int64_t const mb = b.numerator_ * (std::int64_t{1} << (j - b.exponent_));
  return {ma + mb, j};
}

std::strong_ordering operator<=>(NumberLiteral a, NumberLiteral b) {
  __int128 const lhs = static_cast<__int128>(a.numerator_)
                       << static_cast<int>(b.exponent_);
  __int128 const rhs = static_cast<__int128>(b.numerator_)
                       << static_cast<int>(a.exponent_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string NumberLiteral::to_string() const {
  if (is_integer()) {
    return std::to_string(numerator_);
  }
  return std::to_string(numerator_) + "/" +
         std::to_string(std::int64_t{1} << exponent_);
}

std::vector<NumberLiteral> dyadics_up_to(unsigned max_exponent,
                                         std::int64_t max_abs) {
  std::int64_t const scale = std::int64_t{1} << max_exponent;
  std::vector<NumberLiteral> out;
  for (std::int64_t m = -max_abs * scale; m <= max_abs * scale; ++m) {
    out.emplace_back(m, max_exponent);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GameStore
// ---------------------------------------------------------------------------

namespace {

std::uint64_t pair_key(GameId a, GameId b) {
  if (b < a) std::swap(a, b);
  return (static_cast<std::uint64_t>(a.value) << 32) | b.value;
}

void normalize(std::vector<GameId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::size_t GameStore::hash_options(std::span<GameId const> left,
                                    std::span<GameId const> right) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (left.size() * 31 + right.size());
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (GameId g : left) mix(g.value);
  mix(0xffffffffull);
  for (GameId g : right) mix(g.value);
  return static_cast<std::size_t>(h);
}

std::size_t GameStore::NodeHash::operator()(std::uint32_t id) const {
  GameId const g{id};
  return hash_options(store->left(g), store->right(g));
}

std::size_t GameStore::NodeHash::operator()(
    std::pair<std::span<GameId const>, std::span<GameId const>> const& key)
    const {
  return hash_options(key.first, key.second);
}

bool GameStore::NodeEq::operator()(
    std::pair<std::span<GameId const>, std::span<GameId const>> const& key,
    std::uint32_t id) const {
  GameId const g{id};
  auto const l = store->left(g);
  auto const r = store->right(g);
  return std::equal(key.first.begin(), key.first.end(), l.begin(), l.end()) &&
         std::equal(key.second.begin(), key.second.end(), r.begin(), r.end());
}

GameStore::GameStore()
    : index_(64, NodeHash{this}, NodeEq{this}) {
  GameId const z = intern({}, {});
  assert(z == kZero);
  (void)z;
}

GameId GameStore::intern(std::vector<GameId> left, std::vector<GameId> right) {
  normalize(left);
  normalize(right);
  auto const key = std::make_pair(std::span<GameId const>(left),
                                  std::span<GameId const>(right));
  if (auto it = index_.find(key); it != index_.end()) {
    return GameId{*it};
  }
  unsigned birthday = 0;
  for (GameId g : left) birthday = std::max(birthday, this->birthday(g) + 1);
  for (GameId g : right) birthday = std::max(birthday, this->birthday(g) + 1);

  auto const id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({static_cast<std::uint32_t>(arena_.size()),
                    static_cast<std::uint32_t>(left.size()),
                    static_cast<std::uint32_t>(right.size()), birthday});
  arena_.insert(arena_.end(), left.begin(), left.end());
  arena_.insert(arena_.end(), right.begin(), right.end());
  flags_.push_back(0);
  left_length_.push_back(-2);
  right_length_.push_back(-2);
  index_.insert(id);
  return GameId{id};
}

std::span<GameId const> GameStore::left(GameId g) const {
  Node const& n = nodes_[g.value];
  return {arena_.data() + n.offset, n.n_left};
}

std::span<GameId const> GameStore::right(GameId g) const {
  Node const& n = nodes_[g.value];
  return {arena_.data() + n.offset + n.n_left, n.n_right};
}

GameId GameStore::integer(std::int64_t n) {
  if (n == 0) return kZero;
  if (auto it = integer_memo_.find(n); it != integer_memo_.end()) {
    return GameId{it->second};
  }
  GameId g = kZero;
  std::int64_t const step = n > 0 ? 1 : -1;
  for (std::int64_t k = step; k != n + step; k += step) {
    if (auto it = integer_memo_.find(k); it != integer_memo_.end()) {
      g = GameId{it->second};
      continue;
    }
    g = n > 0 ? intern({g}, {}) : intern({}, {g});
    integer_memo_.emplace(k, g.value);
  }
  return g;
}

GameId GameStore::dyadic(NumberLiteral a) {
  if (a.is_integer()) {
    return integer(a.numerator());
  }
  GameId const l = dyadic(*a.left_option());
  GameId const r = dyadic(*a.right_option());
  return intern({l}, {r});
}

GameId GameStore::lambda(unsigned k) {
  if (k < 1) {
    throw std::invalid_argument("lambda(k) requires k >= 1");
  }
  if (lambda_memo_.empty()) {
    lambda_memo_.push_back(intern({kZero}, {integer(-1)}).value);
  }
  while (lambda_memo_.size() < k) {
    GameId const prev{lambda_memo_.back()};
    lambda_memo_.push_back(intern({kZero}, {prev}).value);
  }
  return GameId{lambda_memo_[k - 1]};
}

GameId GameStore::star() { return intern({kZero}, {kZero}); }

GameId GameStore::conjugate(GameId g) {
  if (g == kZero) return g;
  if (auto it = conjugate_memo_.find(g.value); it != conjugate_memo_.end()) {
    return GameId{it->second};
  }
  std::vector<GameId> l;
  std::vector<GameId> r;
  for (GameId x : right(g)) l.push_back(conjugate(x));
  for (GameId x : left(g)) r.push_back(conjugate(x));
  GameId const c = intern(std::move(l), std::move(r));
  conjugate_memo_.emplace(g.value, c.value);
  conjugate_memo_.emplace(c.value, g.value);
  return c;
}

GameId GameStore::sum(GameId g, GameId h) {
  if (g == kZero) return h;
  if (h == kZero) return g;
  std::uint64_t const key = pair_key(g, h);
  if (auto it = sum_memo_.find(key); it != sum_memo_.end()) {
    return GameId{it->second};
  }
  std::vector<GameId> l;
  std::vector<GameId> r;
  // Copy spans first: recursive interning may grow the arena.
  std::vector<GameId> const gl(left(g).begin(), left(g).end());
  std::vector<GameId> const gr(right(g).begin(), right(g).end());
  std::vector<GameId> const hl(left(h).begin(), left(h).end());
  std::vector<GameId> const hr(right(h).begin(), right(h).end());
  for (GameId x : gl) l.push_back(sum(x, h));
  for (GameId x : hl) l.push_back(sum(g, x));
  for (GameId x : gr) r.push_back(sum(x, h));
  for (GameId x : hr) r.push_back(sum(g, x));
  GameId const s = intern(std::move(l), std::move(r));
  sum_memo_.emplace(key, s.value);
  return s;
}

GameId GameStore::sum(std::span<GameId const> terms) {
  GameId acc = kZero;
  for (GameId t : terms) acc = sum(acc, t);
  return acc;
}

std::vector<GameId> GameStore::followers(GameId g) const {
  std::vector<GameId> order;
  std::unordered_set<std::uint32_t> seen;
  // Iterative post-order DFS.
  std::vector<std::pair<GameId, std::size_t>> stack{{g, 0}};
  seen.insert(g.value);
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    auto const l = left(node);
    auto const r = right(node);
    if (next < l.size() + r.size()) {
      GameId const child = next < l.size() ? l[next] : r[next - l.size()];
      ++next;
      if (seen.insert(child.value).second) {
        stack.emplace_back(child, 0);
      }
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }
  return order;
}

bool GameStore::is_dead_left_end(GameId g) {
  std::uint16_t const f = flags(g);
  if (f & kDeadLeftKnown) return f & kDeadLeft;
  bool dead = is_left_end(g);
  if (dead) {
    // Right options of a left end are followers; each must itself be a dead
    // left end for every follower to be a left end.
    std::vector<GameId> const r(right(g).begin(), right(g).end());
    for (GameId x : r) {
      if (!is_dead_left_end(x)) {
        dead = false;
        break;
      }
    }
  }
  flags(g) |= kDeadLeftKnown | (dead ? kDeadLeft : 0);
  return dead;
}

bool GameStore::is_dead_right_end(GameId g) {
  std::uint16_t const f = flags(g);
  if (f & kDeadRightKnown) return f & kDeadRight;
  bool dead = is_right_end(g);
  if (dead) {
    std::vector<GameId> const l(left(g).begin(), left(g).end());
    for (GameId x : l) {
      if (!is_dead_right_end(x)) {
        dead = false;
        break;
      }
    }
  }
  flags(g) |= kDeadRightKnown | (dead ? kDeadRight : 0);
  return dead;
}

bool GameStore::is_dead_ending(GameId g) {
  std::uint16_t const f = flags(g);
  if (f & kDeadEndingKnown) return f & kDeadEnding;
  bool ok = true;
  if ((is_left_end(g) || is_right_end(g)) && !is_dead_end(g)) {
    ok = false;
  }
  if (ok) {
    std::vector<GameId> opts(left(g).begin(), left(g).end());
    opts.insert(opts.end(), right(g).begin(), right(g).end());
    for (GameId x : opts) {
      if (!is_dead_ending(x)) {
        ok = false;
        break;
      }
    }
  }
  flags(g) |= kDeadEndingKnown | (ok ? kDeadEnding : 0);
  return ok;
}

bool GameStore::is_dicot(GameId g) {
  std::uint16_t const f = flags(g);
  if (f & kDicotKnown) return f & kDicot;
  bool ok = g == kZero || (!is_left_end(g) && !is_right_end(g));
  if (ok) {
    std::vector<GameId> opts(left(g).begin(), left(g).end());
    opts.insert(opts.end(), right(g).begin(), right(g).end());
    for (GameId x : opts) {
      if (!is_dicot(x)) {
        ok = false;
        break;
      }
    }
  }
  flags(g) |= kDicotKnown | (ok ? kDicot : 0);
  return ok;
}

std::optional<unsigned> GameStore::side_length(GameId g, bool left_side) {
  auto& memo = left_side ? left_length_ : right_length_;
  std::int16_t const cached = memo[g.value];
  if (cached >= 0) return static_cast<unsigned>(cached);
  if (cached == -1) return std::nullopt;

  std::optional<unsigned> best;
  if (g == kZero) {
    best = 0;
  } else {
    auto const opts_span = left_side ? left(g) : right(g);
    std::vector<GameId> const opts(opts_span.begin(), opts_span.end());
    for (GameId x : opts) {
      if (auto len = side_length(x, left_side)) {
        if (!best || *len + 1 < *best) best = *len + 1;
      }
    }
  }
  memo[g.value] = best ? static_cast<std::int16_t>(*best) : std::int16_t{-1};
  return best;
}

std::optional<unsigned> GameStore::left_length(GameId g) {
  return side_length(g, true);
}

std::optional<unsigned> GameStore::right_length(GameId g) {
  return side_length(g, false);
}

}  // namespace misere
