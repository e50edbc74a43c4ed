#include "misere/universe.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

namespace misere {

namespace {

std::size_t round_up(std::size_t n, std::size_t m) { return (n + m - 1) / m * m; }

void sort_by_birthday(GameStore const& store, std::vector<GameId>& games) {
  std::sort(games.begin(), games.end(), [&store](GameId a, GameId b) {
    unsigned const ba = store.birthday(a);
    unsigned const bb = store.birthday(b);
    return ba != bb ? ba < bb : a < b;
  });
  games.erase(std::unique(games.begin(), games.end()), games.end());
}

// Subsets of [0, n) of size <= k: empty first, then by size, each size in
// lexicographic order.
std::vector<std::vector<std::uint32_t>> subsets_up_to(std::size_t n,
                                                      unsigned k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  for (unsigned size = 0; size <= k; ++size) {
    auto rec = [&](auto&& self, std::uint32_t start) -> void {
      if (cur.size() == size) {
        out.push_back(cur);
        return;
      }
      for (std::uint32_t i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

std::size_t count_subsets(std::size_t n, unsigned k) {
  std::size_t total = 0;
  std::size_t binom = 1;  // C(n, size)
  for (unsigned size = 0; size <= k && size <= n; ++size) {
    total += binom;
    binom = binom * (n - size) / (size + 1);
  }
  return total;
}

std::vector<GameId> to_games(std::vector<GameId> const& base,
                             std::vector<std::uint32_t> const& choice) {
  std::vector<GameId> out;
  out.reserve(choice.size());
  for (std::uint32_t i : choice) out.push_back(base[i]);
  return out;
}

unsigned parse_field(std::string_view field, char tag, std::string_view text) {
  if (field.size() < 2 || field[0] != tag) {
    throw std::invalid_argument("bad test-set descriptor '" + std::string(text) +
                                "': expected field '" + tag + "<n>'");
  }
  unsigned value = 0;
  auto const* first = field.data() + 1;
  auto const* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("bad test-set descriptor '" + std::string(text) +
                                "': bad number in '" + std::string(field) + "'");
  }
  return value;
}

TestSet materialized(Descriptor d, std::vector<GameId> games,
                     GameStore const& store) {
  sort_by_birthday(store, games);
  return TestSet(d, std::move(games), std::nullopt, Bitset());
}

}  // namespace

// ---------------------------------------------------------------------------
// Descriptor
// ---------------------------------------------------------------------------

std::string Descriptor::to_string() const {
  auto const n = [](auto x) { return std::to_string(x); };
  switch (kind) {
    case UniverseKind::DeadEnding:
      return "dead-ending:b" + n(birthday) + ":k" + n(options);
    case UniverseKind::DeadEnds:
      return "dead-ends:b" + n(birthday) + ":k" + n(options);
    case UniverseKind::DeadEndClosure:
      return "dead-end-closure:b" + n(birthday) + ":k" + n(options) + ":t" +
             n(terms);
    case UniverseKind::Numbers:
      return "numbers:j" + n(exponent) + ":v" + n(value) + ":t" + n(terms);
  }
  return {};
}

Descriptor Descriptor::parse(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t const colon = text.find(':', start);
    fields.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  std::string_view const kind = fields[0];
  auto const expect = [&](std::size_t n) {
    if (fields.size() != n) {
      throw std::invalid_argument("bad test-set descriptor '" +
                                  std::string(text) + "': expected " +
                                  std::to_string(n - 1) + " bound fields");
    }
  };
  if (kind == "dead-ending" || kind == "dead-ends") {
    expect(3);
    unsigned const b = parse_field(fields[1], 'b', text);
    unsigned const k = parse_field(fields[2], 'k', text);
    return kind == "dead-ending" ? dead_ending(b, k) : dead_ends(b, k);
  }
  if (kind == "dead-end-closure") {
    expect(4);
    return dead_end_closure(parse_field(fields[1], 'b', text),
                            parse_field(fields[2], 'k', text),
                            parse_field(fields[3], 't', text));
  }
  if (kind == "numbers") {
    expect(4);
    return numbers(parse_field(fields[1], 'j', text),
                   parse_field(fields[2], 'v', text),
                   parse_field(fields[3], 't', text));
  }
  throw std::invalid_argument("bad test-set descriptor '" + std::string(text) +
                              "': unknown universe '" + std::string(kind) + "'");
}

// ---------------------------------------------------------------------------
// TestSet
// ---------------------------------------------------------------------------

TestSet::TestSet(Descriptor descriptor, std::vector<GameId> base,
                 std::optional<TopLayer> top, Bitset top_valid)
    : descriptor_(descriptor), base_(std::move(base)), top_(std::move(top)) {
  top_offset_ = round_up(base_.size(), Bitset::kWordBits);
  std::size_t const top_slots = top_ ? top_->rows() * top_->stride : 0;
  mask_ = Bitset(top_offset_ + top_slots);
  for (std::size_t i = 0; i < base_.size(); ++i) mask_.set(i);
  if (top_) {
    auto dst = mask_.words().subspan(top_offset_ / Bitset::kWordBits);
    auto src = top_valid.words();
    std::copy(src.begin(), src.end(), dst.begin());
  }
  size_ = mask_.count();
}

GameId TestSet::member(GameStore& store, std::size_t slot) const {
  if (!is_member(slot)) {
    throw std::out_of_range("test-set slot " + std::to_string(slot) +
                            " holds no member");
  }
  if (slot < base_.size()) return base_[slot];
  std::size_t const rel = slot - top_offset_;
  std::size_t const row = rel / top_->stride;
  std::size_t const col = rel % top_->stride;
  return store.intern(to_games(base_, top_->choices[row]),
                      to_games(base_, top_->choices[col]));
}

std::vector<GameId> TestSet::materialize(GameStore& store,
                                         std::size_t limit) const {
  if (size_ - base_.size() > limit) {
    throw BudgetExceeded("materializing " + descriptor_.to_string() +
                         " needs " + std::to_string(size_) +
                         " games; limit is " + std::to_string(limit));
  }
  std::vector<GameId> out = base_;
  if (top_) {
    for (std::size_t slot = top_offset_; slot < mask_.size(); ++slot) {
      if (mask_.test(slot)) out.push_back(member(store, slot));
    }
  }
  return out;
}

std::vector<GameId> TestSet::left_ends(GameStore& store) const {
  std::vector<GameId> out;
  for (GameId g : base_) {
    if (store.is_left_end(g)) out.push_back(g);
  }
  if (top_ && !top_->choices.empty() && top_->choices[0].empty()) {
    // Row 0 is the empty left choice.
    for (std::size_t col = 0; col < top_->rows(); ++col) {
      std::size_t const slot = top_offset_ + col;
      if (mask_.test(slot)) out.push_back(member(store, slot));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

TestSet gen_dead_ending(GameStore& store, unsigned b, unsigned k,
                        GenerationBudget const& budget) {
  if (k < 1) {
    throw std::invalid_argument("gen_dead_ending: option cap k must be >= 1");
  }
  Descriptor const d = Descriptor::dead_ending(b, k);
  std::vector<GameId> pool{kZero};
  if (b == 0) {
    return TestSet(d, pool, std::nullopt, Bitset());
  }
  for (unsigned level = 1; level <= b; ++level) {
    std::size_t const n_choices = count_subsets(pool.size(), k);
    std::size_t const stride = round_up(n_choices, Bitset::kWordBits);
    bool const last = level == b;
    if (last && n_choices * stride > budget.max_slots) {
      throw BudgetExceeded(d.to_string() + ": birthday-" +
                           std::to_string(level) + " layer needs " +
                           std::to_string(n_choices * stride) +
                           " slots; limit is " +
                           std::to_string(budget.max_slots));
    }
    if (!last && n_choices * n_choices > budget.max_materialized * 4) {
      throw BudgetExceeded(d.to_string() + ": materializing birthday " +
                           std::to_string(level) + " needs up to " +
                           std::to_string(n_choices * n_choices) +
                           " games; limit is " +
                           std::to_string(budget.max_materialized));
    }

    auto choices = subsets_up_to(pool.size(), k);
    // Per choice: does it reach the previous birthday, and is every option
    // a dead left (right) end?
    unsigned const prev = level - 1;
    std::vector<char> reaches(choices.size());
    std::vector<char> all_dead_left(choices.size());
    std::vector<char> all_dead_right(choices.size());
    for (std::size_t c = 0; c < choices.size(); ++c) {
      bool r = false, dl = true, dr = true;
      for (std::uint32_t i : choices[c]) {
        GameId const g = pool[i];
        r = r || store.birthday(g) == prev;
        dl = dl && store.is_dead_left_end(g);
        dr = dr && store.is_dead_right_end(g);
      }
      reaches[c] = r;
      all_dead_left[c] = dl;
      all_dead_right[c] = dr;
    }
    // {A | B} is dead-ending iff its options are (true for the pool) and,
    // when it is an end, it is a dead end.
    auto const valid = [&](std::size_t row, std::size_t col) {
      if (!reaches[row] && !reaches[col]) return false;
      bool const left_empty = choices[row].empty();
      bool const right_empty = choices[col].empty();
      if (left_empty && right_empty) return false;
      if (left_empty) return static_cast<bool>(all_dead_left[col]);
      if (right_empty) return static_cast<bool>(all_dead_right[row]);
      return true;
    };

    if (last) {
      Bitset top_valid(n_choices * stride);
      for (std::size_t row = 0; row < n_choices; ++row) {
        for (std::size_t col = 0; col < n_choices; ++col) {
          if (valid(row, col)) top_valid.set(row * stride + col);
        }
      }
      sort_by_birthday(store, pool);
      return TestSet(d, pool, TopLayer{std::move(choices), stride},
                     std::move(top_valid));
    }

    std::vector<GameId> next = pool;
    for (std::size_t row = 0; row < n_choices; ++row) {
      for (std::size_t col = 0; col < n_choices; ++col) {
        if (!valid(row, col)) continue;
        next.push_back(store.intern(to_games(pool, choices[row]),
                                    to_games(pool, choices[col])));
        if (next.size() > budget.max_materialized) {
          throw BudgetExceeded(d.to_string() + ": birthday-" +
                               std::to_string(level) +
                               " games exceed materialization limit " +
                               std::to_string(budget.max_materialized));
        }
      }
    }
    sort_by_birthday(store, next);
    pool = std::move(next);
  }
  return TestSet(d, pool, std::nullopt, Bitset());  // unreachable for b >= 1
}

TestSet gen_dead_ends(GameStore& store, unsigned b, unsigned k,
                      GenerationBudget const& budget) {
  if (k < 1) {
    throw std::invalid_argument("gen_dead_ends: option cap k must be >= 1");
  }
  // Dead right ends of birthday <= level: {S | .} with S a set of dead
  // right ends of smaller birthday.
  std::vector<GameId> right_ends{kZero};
  for (unsigned level = 1; level <= b; ++level) {
    auto const choices = subsets_up_to(right_ends.size(), k);
    std::vector<GameId> next = right_ends;
    for (auto const& c : choices) {
      if (c.empty()) continue;
      bool reaches = false;
      for (std::uint32_t i : c) {
        reaches = reaches || store.birthday(right_ends[i]) == level - 1;
      }
      if (reaches) next.push_back(store.intern(to_games(right_ends, c), {}));
    }
    if (next.size() > budget.max_materialized) {
      throw BudgetExceeded(Descriptor::dead_ends(b, k).to_string() +
                           ": dead ends exceed materialization limit " +
                           std::to_string(budget.max_materialized));
    }
    sort_by_birthday(store, next);
    right_ends = std::move(next);
  }
  std::vector<GameId> all = right_ends;
  for (GameId g : right_ends) all.push_back(store.conjugate(g));
  return materialized(Descriptor::dead_ends(b, k), std::move(all), store);
}

namespace {

std::vector<GameId> all_sums(GameStore& store, std::vector<GameId> const& terms,
                             unsigned t, GenerationBudget const& budget,
                             Descriptor const& d) {
  std::vector<GameId> out;
  std::unordered_set<GameId> seen;
  for_each_multiset(terms.size(), t, [&](std::vector<std::size_t> const& idx) {
    GameId s = kZero;
    for (std::size_t i : idx) s = store.sum(s, terms[i]);
    if (seen.insert(s).second) out.push_back(s);
    if (out.size() > budget.max_materialized) {
      throw BudgetExceeded(d.to_string() + ": sums exceed materialization limit " +
                           std::to_string(budget.max_materialized));
    }
  });
  return out;
}

}  // namespace

TestSet gen_dead_end_closure(GameStore& store, unsigned b, unsigned k,
                             unsigned t, GenerationBudget const& budget) {
  Descriptor const d = Descriptor::dead_end_closure(b, k, t);
  std::vector<GameId> ends = gen_dead_ends(store, b, k, budget).base();
  std::erase(ends, kZero);
  return materialized(d, all_sums(store, ends, t, budget, d), store);
}

TestSet gen_number_closure(GameStore& store, unsigned max_j,
                           std::int64_t max_abs, unsigned t,
                           GenerationBudget const& budget) {
  Descriptor const d = Descriptor::numbers(max_j, max_abs, t);
  std::vector<GameId> numbers;
  for (NumberLiteral a : dyadics_up_to(max_j, max_abs)) {
    if (a.sign() != 0) numbers.push_back(store.dyadic(a));
  }
  return materialized(d, all_sums(store, numbers, t, budget, d), store);
}

TestSet make_test_set(GameStore& store, Descriptor const& d,
                      GenerationBudget const& budget) {
  switch (d.kind) {
    case UniverseKind::DeadEnding:
      return gen_dead_ending(store, d.birthday, d.options, budget);
    case UniverseKind::DeadEnds:
      return gen_dead_ends(store, d.birthday, d.options, budget);
    case UniverseKind::DeadEndClosure:
      return gen_dead_end_closure(store, d.birthday, d.options, d.terms, budget);
    case UniverseKind::Numbers:
      return gen_number_closure(store, d.exponent, d.value, d.terms, budget);
  }
  throw std::invalid_argument("unknown universe kind");
}

}  // namespace misere
