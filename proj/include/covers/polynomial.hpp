#pragma once

#include <string>
#include <utility>
#include <vector>

#include "covers/cyclotomic.hpp"

namespace covers::funfield {

using exact::Cyclotomic;
using exact::Rational;

// Univariate polynomial over Q(zeta_N), dense ascending coefficients with
// no trailing zeros; the zero polynomial has no coefficients. All
// coefficients share one ambient order.
class CyPoly {
 public:
  explicit CyPoly(long order) : order_(order) {}
  CyPoly(long order, std::vector<Cyclotomic> coeffs);

  static CyPoly zero(long order) { return CyPoly(order); }
  static CyPoly constant(const Cyclotomic& c);
  static CyPoly from_rational(long order, const Rational& q);
  static CyPoly variable(long order);  // y
  static CyPoly monomial(long order, long deg, const Cyclotomic& c);

  long order() const { return order_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return (long)coeffs_.size() - 1; }  // -1 for zero
  const std::vector<Cyclotomic>& coeffs() const { return coeffs_; }
  const Cyclotomic& leading() const;
  Cyclotomic coeff(long i) const;

  CyPoly operator-() const;
  friend CyPoly operator+(const CyPoly& a, const CyPoly& b);
  friend CyPoly operator-(const CyPoly& a, const CyPoly& b);
  friend CyPoly operator*(const CyPoly& a, const CyPoly& b);
  friend CyPoly operator*(const Cyclotomic& c, const CyPoly& a);

  CyPoly pow(long e) const;
  CyPoly derivative() const;
  Cyclotomic eval(const Cyclotomic& x) const;
  CyPoly lifted(long new_order) const;

  // division with remainder over the coefficient field
  static std::pair<CyPoly, CyPoly> divmod(const CyPoly& a, const CyPoly& b);
  // monic gcd
  static CyPoly gcd(CyPoly a, CyPoly b);

  CyPoly monic() const;

  bool operator==(const CyPoly& other) const;
  bool operator!=(const CyPoly& other) const { return !(*this == other); }

  std::string str(const std::string& var = "y") const;

 private:
  void trim();
  long order_;
  std::vector<Cyclotomic> coeffs_;
};

}  // namespace covers::funfield
