#include "pmfp/exprmap.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace pmfp::expr {

namespace {

enum class Tok { Number, X, Y, Max, Min, Plus, Minus, Star, Slash, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  double number = 0.0;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_.offset = pos_;
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '+': current_.kind = Tok::Plus; ++pos_; return;
      case '-': current_.kind = Tok::Minus; ++pos_; return;
      case '*': current_.kind = Tok::Star; ++pos_; return;
      case '/': current_.kind = Tok::Slash; ++pos_; return;
      case '(': current_.kind = Tok::LParen; ++pos_; return;
      case ')': current_.kind = Tok::RParen; ++pos_; return;
      case ',': current_.kind = Tok::Comma; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      lex_number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      lex_ident();
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  void lex_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("malformed number: expected digits after '.'", pos_);
      }
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("malformed number: expected digits in exponent", pos_);
      }
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    double value = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc{}) throw ParseError("number out of range", start);
    current_.kind = Tok::Number;
    current_.number = value;
  }

  void lex_ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") current_.kind = Tok::X;
    else if (name == "y") current_.kind = Tok::Y;
    else if (name == "max") current_.kind = Tok::Max;
    else if (name == "min") current_.kind = Tok::Min;
    else throw ParseError("unknown identifier '" + std::string(name) + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

Ast node(std::variant<Literal, Variable, Negate, Binary, Call> v) {
  return std::make_shared<const Node>(Node{std::move(v)});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Ast parse() {
    Ast e = expression();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End) throw ParseError("unexpected trailing input", t.offset);
    return e;
  }

 private:
  Ast expression() {
    Ast lhs = term();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      const Tok op = lex_.take().kind;
      Ast rhs = term();
      lhs = node(Binary{op == Tok::Plus ? BinOp::Add : BinOp::Sub, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Ast term() {
    Ast lhs = unary();
    while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
      const Tok op = lex_.take().kind;
      Ast rhs = unary();
      lhs = node(Binary{op == Tok::Star ? BinOp::Mul : BinOp::Div, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Ast unary() {
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      return node(Negate{unary()});
    }
    return primary();
  }

  Ast primary() {
    const Token t = lex_.take();
    switch (t.kind) {
      case Tok::Number: return node(Literal{t.number});
      case Tok::X: return node(Variable{Var::X});
      case Tok::Y: return node(Variable{Var::Y});
      case Tok::Max: return call(Func::Max);
      case Tok::Min: return call(Func::Min);
      case Tok::LParen: {
        Ast e = expression();
        expect(Tok::RParen, "expected ')'");
        return e;
      }
      default: throw ParseError("expected expression", t.offset);
    }
  }

  Ast call(Func fn) {
    expect(Tok::LParen, "expected '(' after function name");
    Ast a = expression();
    expect(Tok::Comma, "expected ','");
    Ast b = expression();
    expect(Tok::RParen, "expected ')'");
    return node(Call{fn, std::move(a), std::move(b)});
  }

  void expect(Tok kind, const char* message) {
    const Token t = lex_.take();
    if (t.kind != kind) throw ParseError(message, t.offset);
  }

  Lexer lex_;
};

int precedence(const Ast& a) {
  if (std::holds_alternative<Binary>(a->v)) {
    const auto& b = std::get<Binary>(a->v);
    return (b.op == BinOp::Add || b.op == BinOp::Sub) ? 1 : 2;
  }
  if (std::holds_alternative<Negate>(a->v)) return 3;
  return 4;
}

void print(const Ast& a, std::string& out) {
  if (const auto* lit = std::get_if<Literal>(&a->v)) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), lit->value);
    out.append(buf, res.ptr);
    return;
  }
  if (const auto* var = std::get_if<Variable>(&a->v)) {
    out += (var->which == Var::X) ? 'x' : 'y';
    return;
  }
  if (const auto* neg = std::get_if<Negate>(&a->v)) {
    out += '-';
    const bool wrap = std::holds_alternative<Binary>(neg->child->v);
    if (wrap) out += '(';
    print(neg->child, out);
    if (wrap) out += ')';
    return;
  }
  if (const auto* bin = std::get_if<Binary>(&a->v)) {
    const int prec = (bin->op == BinOp::Add || bin->op == BinOp::Sub) ? 1 : 2;
    const bool wrap_l = precedence(bin->lhs) < prec;
    const bool wrap_r = precedence(bin->rhs) <= prec;
    if (wrap_l) out += '(';
    print(bin->lhs, out);
    if (wrap_l) out += ')';
    switch (bin->op) {
      case BinOp::Add: out += " + "; break;
      case BinOp::Sub: out += " - "; break;
      case BinOp::Mul: out += " * "; break;
      case BinOp::Div: out += " / "; break;
    }
    if (wrap_r) out += '(';
    print(bin->rhs, out);
    if (wrap_r) out += ')';
    return;
  }
  const auto& c = std::get<Call>(a->v);
  out += (c.fn == Func::Max) ? "max(" : "min(";
  print(c.a, out);
  out += ", ";
  print(c.b, out);
  out += ')';
}

}  // namespace

Ast parse_expr(std::string_view text) {
  if (text.empty()) throw ParseError("empty expression", 0);
  return Parser(text).parse();
}

double eval_expr(const Ast& ast, double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw EvalError("non-finite input");
  struct Eval {
    double x, y;
    double run(const Ast& a) const {
      if (const auto* lit = std::get_if<Literal>(&a->v)) return lit->value;
      if (const auto* var = std::get_if<Variable>(&a->v)) return var->which == Var::X ? x : y;
      if (const auto* neg = std::get_if<Negate>(&a->v)) return -run(neg->child);
      if (const auto* bin = std::get_if<Binary>(&a->v)) {
        const double l = run(bin->lhs);
        const double r = run(bin->rhs);
        switch (bin->op) {
          case BinOp::Add: return l + r;
          case BinOp::Sub: return l - r;
          case BinOp::Mul: return l * r;
          case BinOp::Div:
            if (r == 0.0) throw EvalError("division by zero");
            return l / r;
        }
      }
      const auto& c = std::get<Call>(a->v);
      return c.fn == Func::Max ? std::max(run(c.a), run(c.b)) : std::min(run(c.a), run(c.b));
    }
  };
  const double result = Eval{x, y}.run(ast);
  if (!std::isfinite(result)) throw EvalError("non-finite result");
  return result;
}

std::string to_string(const Ast& ast) {
  std::string out;
  print(ast, out);
  return out;
}

bool equal(const Ast& a, const Ast& b) {
  if (a->v.index() != b->v.index()) return false;
  if (const auto* lit = std::get_if<Literal>(&a->v)) {
    return lit->value == std::get<Literal>(b->v).value;
  }
  if (const auto* var = std::get_if<Variable>(&a->v)) {
    return var->which == std::get<Variable>(b->v).which;
  }
  if (const auto* neg = std::get_if<Negate>(&a->v)) {
    return equal(neg->child, std::get<Negate>(b->v).child);
  }
  if (const auto* bin = std::get_if<Binary>(&a->v)) {
    const auto& other = std::get<Binary>(b->v);
    return bin->op == other.op && equal(bin->lhs, other.lhs) && equal(bin->rhs, other.rhs);
  }
  const auto& ca = std::get<Call>(a->v);
  const auto& cb = std::get<Call>(b->v);
  return ca.fn == cb.fn && equal(ca.a, cb.a) && equal(ca.b, cb.b);
}

}  // namespace pmfp::expr
