#include "covers/polynomial.hpp"

#include <sstream>

namespace covers::funfield {

CyPoly::CyPoly(long order, std::vector<Cyclotomic> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.order() != order_)
      throw OrderMismatch("polynomial coefficient has wrong cyclotomic order");
  trim();
}

void CyPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CyPoly CyPoly::constant(const Cyclotomic& c) {
  return CyPoly(c.order(), {c});
}

CyPoly CyPoly::from_rational(long order, const Rational& q) {
  return CyPoly(order, {Cyclotomic::from_rational(order, q)});
}

CyPoly CyPoly::variable(long order) {
  return CyPoly(order, {Cyclotomic::zero(order), Cyclotomic::one(order)});
}

CyPoly CyPoly::monomial(long order, long deg, const Cyclotomic& c) {
  std::vector<Cyclotomic> v((size_t)deg + 1, Cyclotomic::zero(order));
  v[deg] = c;
  return CyPoly(order, std::move(v));
}

const Cyclotomic& CyPoly::leading() const {
  if (is_zero()) throw DivisionByZero("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Cyclotomic CyPoly::coeff(long i) const {
  if (i < 0 || i >= (long)coeffs_.size()) return Cyclotomic::zero(order_);
  return coeffs_[i];
}

CyPoly CyPoly::operator-() const {
  CyPoly out(order_);
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(-c);
  return out;
}

CyPoly operator+(const CyPoly& a, const CyPoly& b) {
  if (a.order_ != b.order_)
    throw OrderMismatch("polynomial operands have different cyclotomic orders");
  CyPoly out(a.order_);
  out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()),
                     Cyclotomic::zero(a.order_));
  for (size_t i = 0; i < out.coeffs_.size(); ++i) {
    if (i < a.coeffs_.size()) out.coeffs_[i] = out.coeffs_[i] + a.coeffs_[i];
    if (i < b.coeffs_.size()) out.coeffs_[i] = out.coeffs_[i] + b.coeffs_[i];
  }
  out.trim();
  return out;
}

CyPoly operator-(const CyPoly& a, const CyPoly& b) { return a + (-b); }

CyPoly operator*(const CyPoly& a, const CyPoly& b) {
  if (a.order_ != b.order_)
    throw OrderMismatch("polynomial operands have different cyclotomic orders");
  if (a.is_zero() || b.is_zero()) return CyPoly::zero(a.order_);
  CyPoly out(a.order_);
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1,
                     Cyclotomic::zero(a.order_));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

CyPoly operator*(const Cyclotomic& c, const CyPoly& a) {
  if (c.is_zero()) return CyPoly::zero(a.order_);
  CyPoly out(a.order_);
  out.coeffs_.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) out.coeffs_.push_back(c * x);
  out.trim();
  return out;
}

CyPoly CyPoly::pow(long e) const {
  if (e < 0) throw InvalidParams("polynomial power must be nonnegative");
  CyPoly result = CyPoly::constant(Cyclotomic::one(order_));
  CyPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CyPoly CyPoly::derivative() const {
  CyPoly out(order_);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    out.coeffs_.push_back(Rational((long long)i) * coeffs_[i]);
  out.trim();
  return out;
}

Cyclotomic CyPoly::eval(const Cyclotomic& x) const {
  Cyclotomic acc = Cyclotomic::zero(order_);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

CyPoly CyPoly::lifted(long new_order) const {
  CyPoly out(new_order);
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(c.lifted(new_order));
  out.trim();
  return out;
}

std::pair<CyPoly, CyPoly> CyPoly::divmod(const CyPoly& a, const CyPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.order_ != b.order_)
    throw OrderMismatch("polynomial operands have different cyclotomic orders");
  CyPoly q(a.order_), r = a;
  if (a.degree() >= b.degree())
    q.coeffs_.assign(a.degree() - b.degree() + 1, Cyclotomic::zero(a.order_));
  Cyclotomic lead_inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Cyclotomic c = r.leading() * lead_inv;
    long shift = r.degree() - b.degree();
    q.coeffs_[shift] = q.coeffs_[shift] + c;
    // r -= c x^shift b
    std::vector<Cyclotomic> sub((size_t)shift + b.coeffs_.size(),
                                Cyclotomic::zero(a.order_));
    for (size_t i = 0; i < b.coeffs_.size(); ++i) sub[shift + i] = c * b.coeffs_[i];
    r = r - CyPoly(a.order_, std::move(sub));
  }
  q.trim();
  return {q, r};
}

CyPoly CyPoly::gcd(CyPoly a, CyPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

CyPoly CyPoly::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * (*this);
}

bool CyPoly::operator==(const CyPoly& other) const {
  if (order_ != other.order_)
    throw OrderMismatch("comparing polynomials at different cyclotomic orders");
  if (coeffs_.size() != other.coeffs_.size()) return false;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != other.coeffs_[i]) return false;
  return true;
}

std::string CyPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Cyclotomic& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool negated = false;
    if (c.is_rational() && c.rational_value() < 0) {
      negated = true;
      cs = (-c).str();
    }
    if (first) {
      if (negated) out << "-";
      first = false;
    } else {
      out << (negated ? " - " : " + ");
    }
    bool multi_term = cs.find(' ') != std::string::npos;
    if (i == 0) {
      if (multi_term) out << "(" << cs << ")";
      else out << cs;
    } else {
      if (cs != "1") {
        if (multi_term || cs[0] == '-') out << "(" << cs << ")";
        else out << cs;
        out << "*";
      }
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace covers::funfield
