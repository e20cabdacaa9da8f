#include "pimcert/expr.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

namespace pimcert {

struct Expr::Node {
  Kind kind;
  double value = 0.0;        // Constant
  std::string name;          // Param
  unsigned exponent = 0;     // Pow
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

Expr Expr::constant(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = v;
  return Expr(std::move(n));
}

Expr Expr::param(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Param;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::neg(Expr e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->lhs = std::move(e.node_);
  return Expr(std::move(n));
}

Expr Expr::binary(Kind k, Expr l, Expr r) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(l.node_);
  n->rhs = std::move(r.node_);
  return Expr(std::move(n));
}

Expr Expr::add(Expr l, Expr r) { return binary(Kind::Add, std::move(l), std::move(r)); }
Expr Expr::sub(Expr l, Expr r) { return binary(Kind::Sub, std::move(l), std::move(r)); }
Expr Expr::mul(Expr l, Expr r) { return binary(Kind::Mul, std::move(l), std::move(r)); }
Expr Expr::div(Expr l, Expr r) { return binary(Kind::Div, std::move(l), std::move(r)); }

Expr Expr::pow(Expr base, unsigned exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->exponent = exponent;
  n->lhs = std::move(base.node_);
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
double Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
unsigned Expr::exponent() const { return node_->exponent; }
Expr Expr::lhs() const { return Expr(node_->lhs); }
Expr Expr::rhs() const { return Expr(node_->rhs); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expr::Kind::Constant:
      return a.value() == b.value();
    case Expr::Kind::Param:
      return a.name() == b.name();
    case Expr::Kind::Neg:
      return a.lhs() == b.lhs();
    case Expr::Kind::Pow:
      return a.exponent() == b.exponent() && a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr run() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_expr() {
    Expr e = parse_term();
    for (;;) {
      if (consume('+')) {
        e = Expr::add(std::move(e), parse_term());
      } else if (consume('-')) {
        e = Expr::sub(std::move(e), parse_term());
      } else {
        return e;
      }
    }
  }

  Expr parse_term() {
    Expr e = parse_factor();
    for (;;) {
      if (consume('*')) {
        e = Expr::mul(std::move(e), parse_factor());
      } else if (consume('/')) {
        e = Expr::div(std::move(e), parse_factor());
      } else {
        return e;
      }
    }
  }

  // factor := '-' factor | base ('^' uint)?   ('^' binds tighter than '-')
  Expr parse_factor() {
    if (consume('-')) return Expr::neg(parse_factor());
    Expr b = parse_base();
    if (consume('^')) return Expr::pow(std::move(b), parse_exponent());
    return b;
  }

  Expr parse_base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr e = parse_expr();
      if (!consume(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("expected digits after decimal point", pos_);
      }
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t e = pos_ + 1;
      if (e < text_.size() && (text_[e] == '+' || text_[e] == '-')) ++e;
      if (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) {
        pos_ = e;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    double v = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc() || res.ptr != text_.data() + pos_) {
      throw ParseError("malformed number literal", start);
    }
    return Expr::constant(v);
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    return Expr::param(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned parse_exponent() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      throw ParseError("exponent must be a non-negative integer", pos_);
    }
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected an unsigned integer exponent", pos_);
    }
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      throw ParseError("exponent must be an integer", pos_);
    }
    unsigned v = 0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc()) throw ParseError("exponent out of range", start);
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_rec(const Expr& e, std::string& out) {
  char buf[40];
  switch (e.kind()) {
    case Expr::Kind::Constant:
      std::snprintf(buf, sizeof buf, "%.17g", e.value());
      out += buf;
      return;
    case Expr::Kind::Param:
      out += e.name();
      return;
    case Expr::Kind::Neg:
      out += "(-";
      print_rec(e.lhs(), out);
      out += ')';
      return;
    case Expr::Kind::Pow:
      out += '(';
      print_rec(e.lhs(), out);
      std::snprintf(buf, sizeof buf, "^%u", e.exponent());
      out += buf;
      out += ')';
      return;
    default: {
      const char* op = e.kind() == Expr::Kind::Add   ? " + "
                       : e.kind() == Expr::Kind::Sub ? " - "
                       : e.kind() == Expr::Kind::Mul ? " * "
                                                     : " / ";
      out += '(';
      print_rec(e.lhs(), out);
      out += op;
      print_rec(e.rhs(), out);
      out += ')';
      return;
    }
  }
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).run(); }

std::string to_string(const Expr& e) {
  std::string out;
  print_rec(e, out);
  return out;
}

double eval_real(const Expr& e, const std::map<std::string, double>& values) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      return e.value();
    case Expr::Kind::Param: {
      const auto it = values.find(e.name());
      if (it == values.end()) throw UnboundParameter("unbound parameter '" + e.name() + "'");
      return it->second;
    }
    case Expr::Kind::Neg:
      return -eval_real(e.lhs(), values);
    case Expr::Kind::Add:
      return eval_real(e.lhs(), values) + eval_real(e.rhs(), values);
    case Expr::Kind::Sub:
      return eval_real(e.lhs(), values) - eval_real(e.rhs(), values);
    case Expr::Kind::Mul:
      return eval_real(e.lhs(), values) * eval_real(e.rhs(), values);
    case Expr::Kind::Div: {
      const double num = eval_real(e.lhs(), values);
      const double den = eval_real(e.rhs(), values);
      if (den == 0.0) throw EvalError("division by zero");
      return num / den;
    }
    case Expr::Kind::Pow: {
      double base = eval_real(e.lhs(), values);
      double acc = 1.0;
      for (unsigned k = e.exponent(); k != 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
      }
      return acc;
    }
  }
  throw EvalError("corrupt expression node");
}

AffineForm eval_affine(const Expr& e, const std::map<std::string, AffineForm>& env,
                       SymbolAllocator& alloc) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      return AffineForm(e.value());
    case Expr::Kind::Param: {
      const auto it = env.find(e.name());
      if (it == env.end()) throw UnboundParameter("unbound parameter '" + e.name() + "'");
      return it->second;
    }
    case Expr::Kind::Neg:
      return af_neg(eval_affine(e.lhs(), env, alloc));
    case Expr::Kind::Add: {
      AffineForm l = eval_affine(e.lhs(), env, alloc);
      return af_add(l, eval_affine(e.rhs(), env, alloc));
    }
    case Expr::Kind::Sub: {
      AffineForm l = eval_affine(e.lhs(), env, alloc);
      return af_sub(l, eval_affine(e.rhs(), env, alloc));
    }
    case Expr::Kind::Mul: {
      AffineForm l = eval_affine(e.lhs(), env, alloc);
      AffineForm r = eval_affine(e.rhs(), env, alloc);
      return af_mul(l, r, alloc);
    }
    case Expr::Kind::Div: {
      AffineForm l = eval_affine(e.lhs(), env, alloc);
      AffineForm r = eval_affine(e.rhs(), env, alloc);
      return af_div(l, r, alloc);
    }
    case Expr::Kind::Pow:
      return af_pow(eval_affine(e.lhs(), env, alloc), e.exponent(), alloc);
  }
  throw EvalError("corrupt expression node");
}

}  // namespace pimcert
