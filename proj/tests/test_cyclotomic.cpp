#include <doctest.h>

#include <random>

#include "covers/cyclotomic.hpp"

using covers::exact::Cyclotomic;
using covers::exact::cyclotomic_polynomial;
using covers::exact::euler_phi;
using covers::exact::Int;
using covers::exact::IntPoly;
using covers::exact::Rational;

namespace {

// independent oracle: naive exact division of integer polynomials, written
// separately from the library's recursion
IntPoly oracle_divide(IntPoly a, const IntPoly& b) {
  IntPoly q(a.size() - b.size() + 1, Int(0));
  for (size_t shift = q.size(); shift-- > 0;) {
    Int c = a[shift + b.size() - 1] / b.back();
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  for (const auto& x : a) REQUIRE(x == 0);
  return q;
}

IntPoly oracle_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Cyclotomic random_value(std::mt19937_64& rng, long order) {
  long phi = euler_phi(order);
  Cyclotomic acc = Cyclotomic::zero(order);
  for (long i = 0; i < phi; ++i) {
    long num = (long)(rng() % 7) - 3;
    if (num == 0) continue;
    acc = acc + Rational(num) * Cyclotomic::root_of_unity(order, i);
  }
  return acc;
}

}  // namespace

TEST_CASE("cyclotomic polynomials: base case and small cases") {
  CHECK(cyclotomic_polynomial(1) == IntPoly{Int(-1), Int(1)});           // x - 1
  CHECK(cyclotomic_polynomial(4) == IntPoly{Int(1), Int(0), Int(1)});    // x^2 + 1
  // Phi_6 by the independent oracle: (x^6 - 1) / (Phi_1 Phi_2 Phi_3)
  IntPoly x6m1(7, Int(0));
  x6m1[0] = -1;
  x6m1[6] = 1;
  IntPoly denom = oracle_mul(
      oracle_mul(IntPoly{Int(-1), Int(1)}, IntPoly{Int(1), Int(1)}),
      IntPoly{Int(1), Int(1), Int(1)});
  CHECK(cyclotomic_polynomial(6) == oracle_divide(x6m1, denom));
  CHECK(cyclotomic_polynomial(6) == IntPoly{Int(1), Int(-1), Int(1)});
}

TEST_CASE("cyclotomic polynomial degree is euler phi") {
  for (long n = 1; n <= 40; ++n)
    CHECK((long)cyclotomic_polynomial(n).size() - 1 == euler_phi(n));
}

TEST_CASE("product of Phi_d over divisors of n is x^n - 1") {
  for (long n : {6L, 12L, 30L}) {
    IntPoly prod{Int(1)};
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) prod = oracle_mul(prod, cyclotomic_polynomial(d));
    IntPoly expect(n + 1, Int(0));
    expect[0] = -1;
    expect[n] = 1;
    CHECK(prod == expect);
  }
}

TEST_CASE("root_of_unity basics") {
  CHECK(Cyclotomic::root_of_unity(5, 0).is_one());
  // sum of the primitive cube roots is -1
  auto s = Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2);
  CHECK(s == Cyclotomic::from_rational(3, Rational(-1)));
  // zeta_8^2 = lift of zeta_4 into order 8
  CHECK(Cyclotomic::root_of_unity(8, 2) ==
        Cyclotomic::root_of_unity(4, 1).lifted(8));
}

TEST_CASE("root powers: zeta_N^k to the N is 1, N <= 64") {
  for (long n = 1; n <= 64; ++n)
    for (long k = 0; k < n; ++k)
      CHECK(Cyclotomic::root_of_unity(n, k).pow(n).is_one());
}

TEST_CASE("arithmetic examples") {
  auto z5 = Cyclotomic::root_of_unity(5, 1);
  CHECK(z5.inverse() == Cyclotomic::root_of_unity(5, 4));
  auto z8 = Cyclotomic::root_of_unity(8, 1);
  CHECK(z8.conj() == Cyclotomic::root_of_unity(8, 7));
  // (1 + zeta_3)(1 + zeta_3^2) = 1, the norm of 1 + zeta_3
  auto one3 = Cyclotomic::one(3);
  auto a = one3 + Cyclotomic::root_of_unity(3, 1);
  auto b = one3 + Cyclotomic::root_of_unity(3, 2);
  CHECK((a * b).is_one());
}

TEST_CASE("division errors") {
  CHECK_THROWS_AS(Cyclotomic::zero(5).inverse(), covers::DivisionByZero);
  CHECK_THROWS_AS(Cyclotomic::zero(4).multiplicative_order(),
                  covers::DivisionByZero);
  CHECK_THROWS_AS(Cyclotomic::one(3) + Cyclotomic::one(4),
                  covers::OrderMismatch);
}

TEST_CASE("lift_to_order examples") {
  CHECK(Cyclotomic::one(2).lifted(6).is_one());
  CHECK(Cyclotomic::root_of_unity(2, 1).lifted(4) ==
        Cyclotomic::root_of_unity(4, 2));
  auto s = Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2);
  CHECK(s.lifted(12) == Cyclotomic::from_rational(12, Rational(-1)));
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(4, 1).lifted(6),
                  covers::NotDivisible);
}

TEST_CASE("multiplicative order") {
  CHECK(*Cyclotomic::one(7).multiplicative_order() == 1);
  CHECK(*Cyclotomic::root_of_unity(6, 1).multiplicative_order() == 6);
  // -zeta_3 = zeta_6^5 has order 6
  auto x = -Cyclotomic::root_of_unity(3, 1);
  CHECK(*x.multiplicative_order() == 6);
  // 2 is not a root of unity
  CHECK(!Cyclotomic::from_rational(5, Rational(2)).multiplicative_order());
  // 1 + zeta_4 is not a root of unity
  auto y = Cyclotomic::one(4) + Cyclotomic::root_of_unity(4, 1);
  CHECK(!y.multiplicative_order());
}

TEST_CASE("field axioms on randomized samples") {
  std::mt19937_64 rng(42);
  for (long order : {4L, 6L, 9L, 12L}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto x = random_value(rng, order);
      auto y = random_value(rng, order);
      auto z = random_value(rng, order);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    }
  }
}

TEST_CASE("conjugation is an involutive automorphism") {
  std::mt19937_64 rng(7);
  for (long order : {5L, 8L, 12L}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto x = random_value(rng, order);
      auto y = random_value(rng, order);
      CHECK(x.conj().conj() == x);
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK((x + y).conj() == x.conj() + y.conj());
    }
  }
}

TEST_CASE("lift is a ring homomorphism") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    auto x = random_value(rng, 6);
    auto y = random_value(rng, 6);
    CHECK((x * y).lifted(12) == x.lifted(12) * y.lifted(12));
    CHECK((x + y).lifted(12) == x.lifted(12) + y.lifted(12));
    // injectivity on samples: distinct values stay distinct
    if (x != y) CHECK(x.lifted(12) != y.lifted(12));
  }
}

TEST_CASE("power basis reduction keeps canonical equality") {
  // zeta_6^2 expressed two ways
  auto a = Cyclotomic::root_of_unity(6, 1) * Cyclotomic::root_of_unity(6, 1);
  auto b = Cyclotomic::root_of_unity(6, 2);
  CHECK(a == b);
  // zeta_6 - 1 = zeta_6^2 reduced mod Phi_6
  auto c = Cyclotomic::root_of_unity(6, 1) - Cyclotomic::one(6);
  CHECK(c == b);
}

TEST_CASE("rendering round-trip forms") {
  CHECK(Cyclotomic::zero(5).str() == "0");
  CHECK(Cyclotomic::one(5).str() == "1");
  CHECK(Cyclotomic::root_of_unity(8, 3).str() == "zeta(8)^3");
  auto x = Rational(3, 2) * Cyclotomic::root_of_unity(8, 2) - Cyclotomic::one(8);
  CHECK(x.str() == "3/2*zeta(8)^2 - 1");
}
