#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "pmfp/errors.hpp"

namespace pmfp::expr {

// Arithmetic expressions in the two variables x and y. Grammar (EBNF):
//
//   expression := term { ("+" | "-") term }
//   term       := unary { ("*" | "/") unary }
//   unary      := "-" unary | primary
//   primary    := number | "x" | "y"
//               | ("max" | "min") "(" expression "," expression ")"
//               | "(" expression ")"
//   number     := digits ["." digits] [("e" | "E") ["+" | "-"] digits]
//
// Usual precedence (unary minus > * / > + -), left associativity. Literals
// are nonnegative; negative values are spelled with unary minus.

enum class BinOp { Add, Sub, Mul, Div };
enum class Func { Max, Min };
enum class Var { X, Y };

struct Node;
using Ast = std::shared_ptr<const Node>;

struct Literal {
  double value;
};
struct Variable {
  Var which;
};
struct Negate {
  Ast child;
};
struct Binary {
  BinOp op;
  Ast lhs;
  Ast rhs;
};
struct Call {
  Func fn;
  Ast a;
  Ast b;
};

struct Node {
  std::variant<Literal, Variable, Negate, Binary, Call> v;
};

// Throws ParseError with the 0-based byte offset of the problem.
Ast parse_expr(std::string_view text);

// Tree-walk evaluation. Throws EvalError on division by zero or a non-finite
// result.
double eval_expr(const Ast& ast, double x, double y);

// Prints with the minimal parentheses needed so that
// parse_expr(to_string(ast)) is structurally identical to ast.
std::string to_string(const Ast& ast);

// Structural equality (literals compared exactly).
bool equal(const Ast& a, const Ast& b);

}  // namespace pmfp::expr
