#pragma once

#include <string>

#include "covers/polynomial.hpp"

namespace covers::funfield {

// Rational function in y over Q(zeta_N), canonical form: numerator and
// denominator coprime (monic gcd divided out), denominator monic, zero is
// 0/1. Exact field arithmetic throughout.
class RatFunc {
 public:
  explicit RatFunc(long order = 1);
  RatFunc(CyPoly num, CyPoly den);  // reduces; throws DivisionByZero on den = 0

  static RatFunc zero(long order) { return RatFunc(order); }
  static RatFunc one(long order);
  static RatFunc from_rational(long order, const Rational& q);
  static RatFunc constant(const Cyclotomic& c);
  static RatFunc variable(long order);  // y
  static RatFunc from_poly(CyPoly p);

  long order() const { return num_.order(); }
  const CyPoly& num() const { return num_; }
  const CyPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_poly() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  RatFunc inverse() const;
  RatFunc pow(long e) const;  // negative e inverts
  RatFunc lifted(long new_order) const;

  bool operator==(const RatFunc& other) const;
  bool operator!=(const RatFunc& other) const { return !(*this == other); }

  std::string str() const;

 private:
  void canonicalize();
  CyPoly num_, den_;
};

}  // namespace covers::funfield
