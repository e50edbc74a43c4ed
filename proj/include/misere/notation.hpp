#ifndef MISERE_NOTATION_HPP_
#define MISERE_NOTATION_HPP_

// Text notation for games.
//
//   expr    := term ( "+" term )*
//   term    := "~" term | atom               ~ is the conjugate
//   atom    := braces | int | frac | "*" | "lambda(" nat ")" | "(" expr ")"
//   braces  := "{" opts "|" opts "}"
//   opts    := "." | <empty> | expr ( "," expr )*
//   int     := "-"? digits
//   frac    := "-"? digits "/" digits        denominator a power of two
//
// Whitespace is insignificant.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "misere/game.hpp"

namespace misere {

struct GameExpr;
using GameExprPtr = std::shared_ptr<GameExpr const>;

struct BracesExpr {
  std::vector<GameExpr> left;
  std::vector<GameExpr> right;
};
struct IntLit {
  std::int64_t value;
};
struct FracLit {
  NumberLiteral value;  // reduced
};
struct StarExpr {};
struct LambdaExpr {
  unsigned k;
};
struct SumExpr {
  std::vector<GameExpr> terms;
};
struct ConjExpr {
  GameExprPtr inner;
};

struct GameExpr {
  std::variant<BracesExpr, IntLit, FracLit, StarExpr, LambdaExpr, SumExpr,
               ConjExpr>
      node;
};

bool operator==(GameExpr const& a, GameExpr const& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& message, unsigned line, unsigned column)
      : std::runtime_error(message + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  unsigned line() const { return line_; }
  unsigned column() const { return column_; }

 private:
  unsigned line_;
  unsigned column_;
};

GameExpr parse_game(std::string_view text);
GameId elaborate(GameStore& store, GameExpr const& expr);
GameId parse_and_elaborate(GameStore& store, std::string_view text);

// Canonical notation. Integers, dyadics, *, lambda(k) and ~lambda(k) print
// by name; anything else prints in brace form, with "…" past depth_cap
// nested braces.
std::string render(GameStore const& store, GameId g, unsigned depth_cap = 6);

// Recognizers used by render.
std::optional<NumberLiteral> as_number(GameStore const& store, GameId g);
std::optional<unsigned> as_lambda(GameStore const& store, GameId g);

}  // namespace misere

#endif  // MISERE_NOTATION_HPP_
