#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "covers/errors.hpp"
#include "covers/rational.hpp"

namespace covers::exact {

// Integer polynomials, dense ascending coefficients, no trailing zeros.
using IntPoly = std::vector<Int>;

long euler_phi(long n);

// Phi_N, computed by exact division of x^N - 1 by the proper cyclotomic
// divisors. Results are memoized; safe for concurrent use.
IntPoly cyclotomic_polynomial(long n);

/// Exact element of the N-th cyclotomic field Q(zeta_N), stored in the power
/// basis 1, zeta, ..., zeta^{phi(N)-1} modulo Phi_N. Values are immutable;
/// all operations are pure. Operands must share the same ambient order:
/// mixing orders throws OrderMismatch, lifting is always explicit.
class Cyclotomic {
 public:
  Cyclotomic();  // zero of order 1

  static Cyclotomic zero(long order);
  static Cyclotomic one(long order);
  static Cyclotomic from_rational(long order, const Rational& value);
  // zeta_N^k, any integer k (reduced mod N)
  static Cyclotomic root_of_unity(long order, long k);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return *coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  // exponent e with *this == zeta^e, when that is known structurally
  std::optional<long> root_exponent() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Rational& c, const Cyclotomic& a);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);

  Cyclotomic inverse() const;          // throws DivisionByZero on zero
  Cyclotomic pow(long e) const;        // negative e inverts first
  Cyclotomic conj() const;             // zeta -> zeta^{-1}
  Cyclotomic lifted(long new_order) const;  // throws NotDivisible

  // Smallest e >= 1 with x^e = 1, or nullopt when x is not a root of unity
  // in this field. Throws DivisionByZero on zero.
  std::optional<long> multiplicative_order() const;

  bool operator==(const Cyclotomic& other) const;
  bool operator!=(const Cyclotomic& other) const { return !(*this == other); }

  // Rendering as a polynomial expression in zeta(N); re-parses under the
  // CLI expression grammar.
  std::string str() const;

  // Display-only numeric embedding zeta_N -> exp(2*pi*i/N). Never used in
  // any decision or oracle.
  std::complex<double> approx() const;

 private:
  struct Raw {};
  Cyclotomic(long order, std::shared_ptr<const std::vector<Rational>> coeffs,
             long root_exp, Raw);

  static Cyclotomic make(long order, std::vector<Rational> coeffs);

  long order_;
  std::shared_ptr<const std::vector<Rational>> coeffs_;  // length phi(order)
  long root_exp_;  // >= 0 when the value is exactly zeta^root_exp_, else -1
};

}  // namespace covers::exact
