#include "covers/ratfunc.hpp"

namespace covers::funfield {

RatFunc::RatFunc(long order)
    : num_(CyPoly::zero(order)),
      den_(CyPoly::constant(Cyclotomic::one(order))) {}

RatFunc::RatFunc(CyPoly num, CyPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = CyPoly::constant(Cyclotomic::one(num_.order()));
    return;
  }
  CyPoly g = CyPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = CyPoly::divmod(num_, g).first;
    den_ = CyPoly::divmod(den_, g).first;
  }
  Cyclotomic lead_inv = den_.leading().inverse();
  num_ = lead_inv * num_;
  den_ = lead_inv * den_;
}

RatFunc RatFunc::one(long order) {
  return from_poly(CyPoly::constant(Cyclotomic::one(order)));
}

RatFunc RatFunc::from_rational(long order, const Rational& q) {
  return from_poly(CyPoly::from_rational(order, q));
}

RatFunc RatFunc::constant(const Cyclotomic& c) {
  return from_poly(CyPoly::constant(c));
}

RatFunc RatFunc::variable(long order) {
  return from_poly(CyPoly::variable(order));
}

RatFunc RatFunc::from_poly(CyPoly p) {
  RatFunc f(p.order());
  f.num_ = std::move(p);
  return f;
}

bool RatFunc::is_one() const {
  return den_.degree() == 0 && num_.degree() == 0 && !num_.is_zero() &&
         num_.coeff(0).is_one() && den_.coeff(0).is_one();
}

RatFunc RatFunc::operator-() const {
  RatFunc out(order());
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("division of rational functions by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc result = one(order());
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

RatFunc RatFunc::lifted(long new_order) const {
  RatFunc out(new_order);
  out.num_ = num_.lifted(new_order);
  out.den_ = den_.lifted(new_order);
  return out;
}

bool RatFunc::operator==(const RatFunc& other) const {
  return num_ == other.num_ && den_ == other.den_;
}

std::string RatFunc::str() const {
  if (is_poly()) return num_.str();
  std::string n = num_.str();
  std::string d = den_.str();
  bool n_simple = n.find(' ') == std::string::npos;
  bool d_simple = d.find(' ') == std::string::npos &&
                  d.find('*') == std::string::npos &&
                  d.find('^') == std::string::npos;
  std::string out;
  out += n_simple ? n : "(" + n + ")";
  out += "/";
  out += d_simple ? d : "(" + d + ")";
  return out;
}

}  // namespace covers::funfield
