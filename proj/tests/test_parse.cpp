#include <doctest.h>

#include <random>

#include "covers/expr.hpp"
#include "covers/json_io.hpp"

using covers::expr::parse_ratfunc;
using covers::expr::ParseError;
using covers::exact::Cyclotomic;
using covers::exact::Rational;
using covers::funfield::RatFunc;

TEST_CASE("parse_ratfunc: worked examples") {
  auto p = parse_ratfunc("y^2 - 1");
  CHECK(p.order() == 1);
  CHECK(p == RatFunc::variable(1) * RatFunc::variable(1) -
                 RatFunc::one(1));

  auto q = parse_ratfunc("zeta(3)*y/(1-2*y)");
  CHECK(q.order() == 3);
  auto num = RatFunc::constant(Cyclotomic::root_of_unity(3, 1)) *
             RatFunc::variable(3);
  auto den = RatFunc::one(3) -
             RatFunc::from_rational(3, Rational(2)) * RatFunc::variable(3);
  CHECK(q == num / den);

  try {
    parse_ratfunc("y/(");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.pos == 3);
  }
}

TEST_CASE("parse_ratfunc: precedence and unary minus") {
  CHECK(parse_ratfunc("2+3*4") == RatFunc::from_rational(1, Rational(14)));
  CHECK(parse_ratfunc("(2+3)*4") == RatFunc::from_rational(1, Rational(20)));
  CHECK(parse_ratfunc("-y^2") == -(parse_ratfunc("y").pow(2)));
  CHECK(parse_ratfunc("1/2 + 1/2") == RatFunc::one(1));
  CHECK(parse_ratfunc("y^-1") == RatFunc::variable(1).inverse());
  CHECK(parse_ratfunc("zeta(4)^2") ==
        RatFunc::from_rational(4, Rational(-1)));
}

TEST_CASE("parse_ratfunc: orders are combined by lcm") {
  auto p = parse_ratfunc("zeta(4) + zeta(6)");
  CHECK(p.order() == 12);
  auto q = parse_ratfunc("y", 8);
  CHECK(q.order() == 8);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_ratfunc(""), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("y +"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("z(3)"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("zeta(0)"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("y y"), ParseError);
}

TEST_CASE("printer output re-parses to the same value") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    long order = std::vector<long>{1, 3, 4, 6}[rng() % 4];
    // random rational function from small parts
    auto rand_poly = [&]() {
      RatFunc acc = RatFunc::zero(order);
      for (long d = 0; d < 3; ++d) {
        long c = (long)(rng() % 7) - 3;
        if (c == 0) continue;
        RatFunc term = RatFunc::from_rational(order, Rational(c));
        if (rng() % 2)
          term = term * RatFunc::constant(
                            Cyclotomic::root_of_unity(order, (long)(rng() % order)));
        term = term * RatFunc::variable(order).pow(d);
        acc = acc + term;
      }
      return acc;
    };
    RatFunc num = rand_poly();
    RatFunc den = rand_poly();
    if (den.is_zero()) continue;
    RatFunc f = num / den;
    auto reparsed = parse_ratfunc(f.str(), order);
    CHECK(reparsed.lifted(f.order()) == f);
  }
}

TEST_CASE("json round-trips for rational functions") {
  auto f = parse_ratfunc("(zeta(3)*y^2 - 1/2)/(y + 3)");
  auto j = covers::io::ratfunc_to_json(f);
  auto g = covers::io::ratfunc_from_json(j);
  CHECK(f == g);
  // one re-emission cycle is byte-identical
  CHECK(covers::io::dump(j) ==
        covers::io::dump(covers::io::ratfunc_to_json(g)));
}
