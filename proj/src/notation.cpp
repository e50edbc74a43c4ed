#include "misere/notation.hpp"

#include <cctype>
#include <limits>

namespace misere {

bool operator==(GameExpr const& a, GameExpr const& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&b](auto const& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        auto const& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, BracesExpr>) {
          return x.left == y.left && x.right == y.right;
        } else if constexpr (std::is_same_v<T, IntLit>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, FracLit>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, StarExpr>) {
          return true;
        } else if constexpr (std::is_same_v<T, LambdaExpr>) {
          return x.k == y.k;
        } else if constexpr (std::is_same_v<T, SumExpr>) {
          return x.terms == y.terms;
        } else {
          return *x.inner == *y.inner;
        }
      },
      a.node);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GameExpr parse() {
    GameExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(std::string const& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(std::string const& msg, std::size_t at) const {
    unsigned line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(msg, line, column);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "', found end of input");
      fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  GameExpr expr() {
    std::vector<GameExpr> terms{term()};
    while (peek('+')) {
      ++pos_;
      terms.push_back(term());
    }
    if (terms.size() == 1) return std::move(terms[0]);
    return GameExpr{SumExpr{std::move(terms)}};
  }

  GameExpr term() {
    if (peek('~')) {
      ++pos_;
      return GameExpr{ConjExpr{std::make_shared<GameExpr const>(term())}};
    }
    return atom();
  }

  GameExpr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char const c = text_[pos_];
    if (c == '{') return braces();
    if (c == '*') {
      ++pos_;
      return GameExpr{StarExpr{}};
    }
    if (c == '(') {
      ++pos_;
      GameExpr e = expr();
      expect(')');
      return e;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return number();
    if (text_.substr(pos_, 7) == "lambda(") return lambda();
    fail(std::string("unexpected '") + c + "'");
  }

  GameExpr lambda() {
    pos_ += 7;
    skip_ws();
    std::size_t const at = pos_;
    std::uint64_t const k = digits();
    if (k == 0) fail_at("lambda(k) requires k >= 1", at);
    if (k > 100000) fail_at("lambda index too large", at);
    expect(')');
    return GameExpr{LambdaExpr{static_cast<unsigned>(k)}};
  }

  std::uint64_t digits() {
    std::size_t const start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t const d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) - d) / 10) {
        fail_at("number too large", start);
      }
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("expected digits");
    return v;
  }

  GameExpr number() {
    bool negative = false;
    if (text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    auto const whole = static_cast<std::int64_t>(digits());
    std::int64_t const n = negative ? -whole : whole;
    if (!peek('/')) return GameExpr{IntLit{n}};
    ++pos_;
    skip_ws();
    std::size_t const at = pos_;
    std::uint64_t const den = digits();
    if (den == 0 || (den & (den - 1)) != 0) {
      fail_at("denominator " + std::to_string(den) + " is not a power of two", at);
    }
    unsigned j = 0;
    while ((std::uint64_t{1} << j) != den) ++j;
    if (j > 62) fail_at("denominator too large", at);
    return GameExpr{FracLit{NumberLiteral(n, j)}};
  }

  std::vector<GameExpr> options() {
    if (peek('.')) {
      ++pos_;
      return {};
    }
    if (peek('|') || peek('}')) return {};
    std::vector<GameExpr> out{expr()};
    while (peek(',')) {
      ++pos_;
      out.push_back(expr());
    }
    return out;
  }

  GameExpr braces() {
    expect('{');
    BracesExpr b;
    b.left = options();
    expect('|');
    b.right = options();
    expect('}');
    return GameExpr{std::move(b)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(GameStore const& store, GameId g, unsigned depth,
                 unsigned cap, std::string& out);

void render_side(GameStore const& store, std::span<GameId const> opts,
                 unsigned depth, unsigned cap, std::string& out) {
  if (opts.empty()) {
    out += '.';
    return;
  }
  for (std::size_t i = 0; i < opts.size(); ++i) {
    if (i) out += ',';
    render_into(store, opts[i], depth, cap, out);
  }
}

// Conjugate of lambda(k): {1 | 0} for k = 1, {~lambda(k-1) | 0} after.
std::optional<unsigned> as_conj_lambda(GameStore const& store, GameId g) {
  auto const l = store.left(g);
  auto const r = store.right(g);
  if (l.size() != 1 || r.size() != 1 || r[0] != kZero) return std::nullopt;
  if (auto n = as_number(store, l[0]); n && *n == NumberLiteral::integer(1)) {
    return 1u;
  }
  if (auto k = as_conj_lambda(store, l[0])) return *k + 1;
  return std::nullopt;
}

void render_into(GameStore const& store, GameId g, unsigned depth,
                 unsigned cap, std::string& out) {
  if (auto n = as_number(store, g)) {
    out += n->to_string();
    return;
  }
  auto const l = store.left(g);
  auto const r = store.right(g);
  if (l.size() == 1 && r.size() == 1 && l[0] == kZero && r[0] == kZero) {
    out += '*';
    return;
  }
  if (auto k = as_lambda(store, g)) {
    out += "lambda(" + std::to_string(*k) + ")";
    return;
  }
  if (auto k = as_conj_lambda(store, g)) {
    out += "~lambda(" + std::to_string(*k) + ")";
    return;
  }
  if (depth >= cap) {
    out += "…";
    return;
  }
  out += '{';
  render_side(store, l, depth + 1, cap, out);
  out += '|';
  render_side(store, r, depth + 1, cap, out);
  out += '}';
}

}  // namespace

GameExpr parse_game(std::string_view text) { return Parser(text).parse(); }

GameId elaborate(GameStore& store, GameExpr const& expr) {
  return std::visit(
      [&store](auto const& x) -> GameId {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BracesExpr>) {
          std::vector<GameId> l, r;
          for (auto const& e : x.left) l.push_back(elaborate(store, e));
          for (auto const& e : x.right) r.push_back(elaborate(store, e));
          return store.intern(std::move(l), std::move(r));
        } else if constexpr (std::is_same_v<T, IntLit>) {
          return store.integer(x.value);
        } else if constexpr (std::is_same_v<T, FracLit>) {
          return store.dyadic(x.value);
        } else if constexpr (std::is_same_v<T, StarExpr>) {
          return store.star();
        } else if constexpr (std::is_same_v<T, LambdaExpr>) {
          return store.lambda(x.k);
        } else if constexpr (std::is_same_v<T, SumExpr>) {
          GameId acc = kZero;
          for (auto const& e : x.terms) acc = store.sum(acc, elaborate(store, e));
          return acc;
        } else {
          return store.conjugate(elaborate(store, *x.inner));
        }
      },
      expr.node);
}

GameId parse_and_elaborate(GameStore& store, std::string_view text) {
  return elaborate(store, parse_game(text));
}

std::optional<NumberLiteral> as_number(GameStore const& store, GameId g) {
  if (g == kZero) return NumberLiteral{};
  auto const l = store.left(g);
  auto const r = store.right(g);
  if (l.size() > 1 || r.size() > 1) return std::nullopt;
  if (l.size() == 1 && r.empty()) {
    auto x = as_number(store, l[0]);
    if (x && x->is_integer() && x->sign() >= 0) {
      return NumberLiteral::integer(x->numerator() + 1);
    }
    return std::nullopt;
  }
  if (l.empty() && r.size() == 1) {
    auto x = as_number(store, r[0]);
    if (x && x->is_integer() && x->sign() <= 0) {
      return NumberLiteral::integer(x->numerator() - 1);
    }
    return std::nullopt;
  }
  if (l.size() == 1 && r.size() == 1) {
    auto a = as_number(store, l[0]);
    auto b = as_number(store, r[0]);
    if (!a || !b || !(*a < *b)) return std::nullopt;
    NumberLiteral const sum = *a + *b;
    NumberLiteral const mid(sum.numerator(), sum.exponent() + 1);
    if (!mid.is_integer() && mid.left_option() == a && mid.right_option() == b) {
      return mid;
    }
  }
  return std::nullopt;
}

std::optional<unsigned> as_lambda(GameStore const& store, GameId g) {
  auto const l = store.left(g);
  auto const r = store.right(g);
  if (l.size() != 1 || r.size() != 1 || l[0] != kZero) return std::nullopt;
  if (auto n = as_number(store, r[0]); n && *n == NumberLiteral::integer(-1)) {
    return 1u;
  }
  if (auto k = as_lambda(store, r[0])) return *k + 1;
  return std::nullopt;
}

std::string render(GameStore const& store, GameId g, unsigned depth_cap) {
  std::string out;
  render_into(store, g, 0, depth_cap, out);
  return out;
}

}  // namespace misere
