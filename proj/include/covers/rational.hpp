#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace covers::exact {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we require everywhere: gcd(|num|, den) = 1 and den > 0.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return numerator(q); }
inline Int rat_den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Fast predicates: comparing a cpp_rational against an int literal builds a
// temporary and cross-multiplies, which dominates hot loops. These read the
// canonical num/den directly.
inline bool q_zero(const Rational& q) { return q.is_zero(); }
inline bool q_one(const Rational& q) {
  return denominator(q) == 1 && numerator(q) == 1;
}

// "p" or "p/q" (q > 1), the form used by every JSON schema in this project.
inline std::string rat_str(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
// a^e mod m for m >= 1, e >= 0
long long powmod_ll(long long a, long long e, long long m);
// inverse of a mod m; requires gcd(a, m) = 1
long long invmod_ll(long long a, long long m);

}  // namespace covers::exact
