#include "covers/expr.hpp"

#include <cctype>
#include <memory>
#include <vector>

namespace covers::expr {

using exact::Cyclotomic;
using exact::Rational;
using funfield::RatFunc;

namespace {

// two passes over one AST: collect zeta orders, then evaluate at their lcm
struct Node {
  enum class Kind { Add, Sub, Mul, Div, Neg, Pow, Int, Var, Zeta } kind;
  std::unique_ptr<Node> lhs, rhs;
  long value = 0;  // Int payload, Zeta order, Pow exponent
};

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  std::unique_ptr<Node> parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  long integer() {
    skip_ws();
    size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
      throw ParseError("expected integer", start);
    long v = 0;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (1L << 40)) throw ParseError("integer literal too large", start);
      ++pos_;
    }
    return neg ? -v : v;
  }

  std::unique_ptr<Node> expr() {
    auto lhs = term();
    while (true) {
      if (eat('+')) {
        auto n = std::make_unique<Node>();
        n->kind = Node::Kind::Add;
        n->lhs = std::move(lhs);
        n->rhs = term();
        lhs = std::move(n);
      } else if (eat('-')) {
        auto n = std::make_unique<Node>();
        n->kind = Node::Kind::Sub;
        n->lhs = std::move(lhs);
        n->rhs = term();
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> term() {
    auto lhs = factor();
    while (true) {
      if (eat('*')) {
        auto n = std::make_unique<Node>();
        n->kind = Node::Kind::Mul;
        n->lhs = std::move(lhs);
        n->rhs = factor();
        lhs = std::move(n);
      } else if (eat('/')) {
        auto n = std::make_unique<Node>();
        n->kind = Node::Kind::Div;
        n->lhs = std::move(lhs);
        n->rhs = factor();
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> factor() {
    skip_ws();
    if (eat('-')) {
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Neg;
      n->lhs = factor();
      return n;
    }
    auto b = base();
    skip_ws();
    if (eat('^')) {
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Pow;
      n->lhs = std::move(b);
      n->value = integer();
      return n;
    }
    return b;
  }

  std::unique_ptr<Node> base() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (std::isdigit((unsigned char)c)) {
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Int;
      n->value = integer();
      return n;
    }
    if (c == 'y') {
      ++pos_;
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Var;
      return n;
    }
    if (s_.compare(pos_, 4, "zeta") == 0) {
      pos_ += 4;
      expect('(');
      long order = integer();
      if (order < 1) throw ParseError("zeta order must be positive", pos_);
      expect(')');
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Zeta;
      n->value = order;
      return n;
    }
    if (c == '(') {
      ++pos_;
      auto n = expr();
      expect(')');
      return n;
    }
    throw ParseError("unexpected character", pos_);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

long collect_orders(const Node& n, long acc) {
  if (n.kind == Node::Kind::Zeta) return exact::lcm_ll(acc, n.value);
  if (n.lhs) acc = collect_orders(*n.lhs, acc);
  if (n.rhs) acc = collect_orders(*n.rhs, acc);
  return acc;
}

RatFunc eval(const Node& n, long N) {
  switch (n.kind) {
    case Node::Kind::Add:
      return eval(*n.lhs, N) + eval(*n.rhs, N);
    case Node::Kind::Sub:
      return eval(*n.lhs, N) - eval(*n.rhs, N);
    case Node::Kind::Mul:
      return eval(*n.lhs, N) * eval(*n.rhs, N);
    case Node::Kind::Div: {
      RatFunc d = eval(*n.rhs, N);
      if (d.is_zero()) throw InvalidData("division by zero in expression");
      return eval(*n.lhs, N) / d;
    }
    case Node::Kind::Neg:
      return -eval(*n.lhs, N);
    case Node::Kind::Pow:
      return eval(*n.lhs, N).pow(n.value);
    case Node::Kind::Int:
      return RatFunc::from_rational(N, Rational(n.value));
    case Node::Kind::Var:
      return RatFunc::variable(N);
    case Node::Kind::Zeta:
      return RatFunc::constant(
          Cyclotomic::root_of_unity(N, N / n.value));
  }
  throw InternalError("unreachable expression node");
}

}  // namespace

RatFunc parse_ratfunc(const std::string& text, long min_order) {
  Parser parser(text);
  auto ast = parser.parse();
  long N = collect_orders(*ast, std::max<long>(1, min_order));
  return eval(*ast, N);
}

}  // namespace covers::expr
