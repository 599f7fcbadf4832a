#include <doctest.h>

#include <random>

#include "covers/expr.hpp"
#include "covers/tower.hpp"

using namespace covers::funfield;
using covers::exact::Cyclotomic;
using covers::exact::Rational;
using covers::expr::parse_ratfunc;

namespace {

TowerBuild d3_tower() {
  return t2_build(3, 3, 2, parse_ratfunc("y", 6), {parse_ratfunc("1", 6)});
}

TowerBuild d5_tower() {
  return t2_build(5, 5, 4, parse_ratfunc("y", 10), {parse_ratfunc("1", 10)});
}

TowerBuild q8_tower() {
  // rational parametrization of c^2 = f^2 + f
  auto f = parse_ratfunc("y^2/(1-2*y)", 4);
  auto c = parse_ratfunc("y*(1-y)/(1-2*y)", 4);
  auto d = parse_ratfunc("1", 4);
  return dicyclic_build(2, c, d, f);
}

TowerElement random_element(const TowerAlgebra& T, std::mt19937_64& rng) {
  TowerElement e = T.zero();
  long N = T.spec().N;
  for (long i = 0; i < T.spec().m; ++i)
    for (long j = 0; j < T.spec().t; ++j) {
      long c = (long)(rng() % 5) - 2;
      if (c == 0) continue;
      RatFunc v = RatFunc::from_rational(N, Rational(c));
      if (rng() % 2) v = v * RatFunc::variable(N);
      e.at(i, j) = v;
    }
  return e;
}

}  // namespace

TEST_CASE("tower_build: degenerate bases") {
  // t = 1, m = 1 is the base field itself
  TowerSpec spec;
  spec.N = 1;
  spec.m = 1;
  spec.t = 1;
  spec.r = 1;
  spec.k = 1;
  spec.f = parse_ratfunc("y");
  spec.g = {parse_ratfunc("y+1")};
  TowerAlgebra T(spec);
  CHECK(T.dim() == 1);
  CHECK(T.one().in_base_field());
  CHECK(T.mul(T.v(), T.w()).base_value() == parse_ratfunc("y*(y+1)"));
}

TEST_CASE("tower_build: w^2 = y") {
  TowerSpec spec;
  spec.N = 2;
  spec.m = 1;
  spec.t = 2;
  spec.r = 1;
  spec.k = 1;
  spec.f = parse_ratfunc("y", 2);
  spec.g = {parse_ratfunc("1", 2), RatFunc::zero(2)};
  TowerAlgebra T(spec);
  CHECK(T.mul(T.w(), T.w()) == T.from_base(parse_ratfunc("y", 2)));
}

TEST_CASE("tower_build rejects zero moduli") {
  TowerSpec spec;
  spec.N = 2;
  spec.m = 1;
  spec.t = 2;
  spec.r = 1;
  spec.k = 1;
  spec.f = RatFunc::zero(2);
  spec.g = {parse_ratfunc("1", 2), RatFunc::zero(2)};
  CHECK_THROWS_AS(TowerAlgebra{spec}, ZeroModulus);
}

TEST_CASE("D_3 tower: six dimensional, full verification") {
  auto build = d3_tower();
  const auto& T = build.algebra;
  CHECK(T.dim() == 6);
  CHECK(build.report.all_pass);
  CHECK(build.modulus_holds);
  // f = a^2 - P^m = y^2 - 1
  CHECK(T.spec().f == parse_ratfunc("y^2-1", 6));

  // explicit composition identity: sigma(tau(v)) = tau(sigma^2(v))
  auto lhs = T.apply(build.sigma, T.apply(build.tau, T.v()));
  auto s2v = T.apply(build.sigma, T.apply(build.sigma, T.v()));
  auto rhs = T.apply(build.tau, s2v);
  CHECK(lhs == rhs);
}

TEST_CASE("D_3 tower: alpha = g^{-1} and the norm identity") {
  auto build = d3_tower();
  const auto& T = build.algebra;
  auto alpha = alpha_of(T, build.tau);
  CHECK(alpha.in_z_level());
  CHECK(alpha == T.inverse(T.from_z(T.spec().g)));
  CHECK(norm_alpha_identity(T, build.tau, alpha));
  // tau(v) = v^{-1} = v^2 g^{-1}
  auto vinv = T.inverse(T.v());
  CHECK(build.tau.image_of_v == vinv);
}

TEST_CASE("D_3 tower: P = 1 with u = 1") {
  auto build = d3_tower();
  auto pd = p_power_descent(build.algebra, build.tau);
  CHECK(pd.P == build.algebra.one());
  CHECK(pd.u == 1);
}

TEST_CASE("D_3 tower: defining relation x^6 - 2y x^3 + 1 = 0") {
  auto build = d3_tower();
  REQUIRE(build.modulus.size() == 7);
  CHECK(build.modulus[0] == parse_ratfunc("1", 6));
  CHECK(build.modulus[3] == parse_ratfunc("-2*y", 6));
  CHECK(build.modulus[6] == parse_ratfunc("1", 6));
  CHECK(build.modulus_holds);
}

TEST_CASE("D_5 tower: full verification") {
  auto build = d5_tower();
  CHECK(build.report.all_pass);
  CHECK(build.modulus_holds);
  auto alpha = alpha_of(build.algebra, build.tau);
  CHECK(norm_alpha_identity(build.algebra, build.tau, alpha));
  auto pd = p_power_descent(build.algebra, build.tau);
  CHECK(covers::exact::gcd_ll(build.algebra.spec().r - 1,
                              build.algebra.spec().m) % pd.u == 0);
}

TEST_CASE("Q8 dicyclic tower: constraint and verification") {
  auto build = q8_tower();
  const auto& T = build.algebra;
  CHECK(T.spec().m == 4);
  CHECK(T.spec().k == 2);
  CHECK(T.spec().r == 3);
  CHECK(build.report.all_pass);
  CHECK(build.modulus_holds);

  // tau^2(v) = -v = sigma^2(v)
  auto t2v = T.apply(build.tau, T.apply(build.tau, T.v()));
  auto neg_v = T.scale(RatFunc::from_rational(T.spec().N, Rational(-1)), T.v());
  CHECK(t2v == neg_v);

  // alpha = z/g, sigma-invariant; N(alpha) g^c = zeta_4^2 = -1 with c = 2
  auto alpha = alpha_of(T, build.tau);
  CHECK(alpha == T.mul(T.w(), T.inverse(T.from_z(T.spec().g))));
  CHECK(norm_alpha_identity(T, build.tau, alpha));

  // P = z, P^2 = f in C(Y), u = 2 divides gcd(r-1, m) = 2
  auto pd = p_power_descent(T, build.tau);
  CHECK(pd.P == T.w());
  CHECK(pd.u == 2);
}

TEST_CASE("dicyclic degenerate split: d = 0, f = c^2, n = 1") {
  auto c = parse_ratfunc("y", 2);
  auto build = dicyclic_build(1, c, RatFunc::zero(c.order()),
                              parse_ratfunc("y^2", 2));
  CHECK(build.report.all_pass);
  CHECK(build.modulus_holds);
}

TEST_CASE("dicyclic constraint violation") {
  CHECK_THROWS_AS(dicyclic_build(2, parse_ratfunc("y", 4),
                                 parse_ratfunc("1", 4), parse_ratfunc("y", 4)),
                  ConstraintViolated);
}

TEST_CASE("t2_build: abelian edge m = 2, r = 1") {
  auto build = t2_build(2, 2, 1, parse_ratfunc("y", 2), {parse_ratfunc("1", 2)});
  CHECK(build.report.all_pass);
  CHECK(build.modulus_holds);
}

TEST_CASE("t2_build: Q8 parametrization through the P = z form") {
  // same tower as dicyclic_build(2, ...), passed with explicit f
  auto f = parse_ratfunc("y^2/(1-2*y)", 4);
  auto c = parse_ratfunc("y*(1-y)/(1-2*y)", 4);
  ZElem P = {RatFunc::zero(4), parse_ratfunc("1", 4)};  // P = w
  auto build = t2_build(4, 2, 3, c, P, f);
  CHECK(build.report.all_pass);
  CHECK(build.modulus_holds);
}

TEST_CASE("t2_build rejects out-of-family parameters") {
  // m = 5, r = 2: 5 does not divide r + 1
  CHECK_THROWS_AS(t2_build(5, 5, 2, parse_ratfunc("y", 10),
                           {parse_ratfunc("1", 10)}),
                  covers::InvalidParams);
  // w-component P without explicit f
  ZElem P = {RatFunc::zero(4), parse_ratfunc("1", 4)};
  CHECK_THROWS_AS(t2_build(4, 2, 3, parse_ratfunc("y", 4), P),
                  covers::InvalidParams);
}

TEST_CASE("verify_group_action rejects a wrong tau") {
  auto build = d3_tower();
  const auto& T = build.algebra;
  TowerAuto bad;
  bad.image_of_v = T.v();  // tau(v) = v breaks sigma tau = tau sigma^2
  bad.image_of_w = T.scale(RatFunc::constant(T.zeta_t()), T.w());
  auto rep = verify_group_action(T, build.sigma, bad,
                                 covers::groups::MetacyclicParams{3, 3, 2, 2});
  CHECK(!rep.all_pass);
}

TEST_CASE("alpha_of flags a non-invariant tau image") {
  auto build = d3_tower();
  const auto& T = build.algebra;
  TowerAuto weird;
  weird.image_of_v = T.mul(T.w(), T.v());  // tau(v) = w v
  weird.image_of_w = T.scale(RatFunc::constant(T.zeta_t()), T.w());
  CHECK_THROWS_AS(alpha_of(T, weird), NotInvariant);
}

TEST_CASE("r = 1 towers: alpha is the constant and P descends at u = m") {
  // Z2 x Z2: tau(v) = zeta_2 v = alpha v^r with alpha = -1
  TowerSpec spec;
  spec.N = 2;
  spec.m = 2;
  spec.t = 2;
  spec.r = 1;
  spec.k = 2;
  spec.f = parse_ratfunc("y", 2);
  spec.g = {parse_ratfunc("y+1", 2), RatFunc::zero(2)};
  TowerAlgebra T(spec);
  auto sigma = T.define_sigma();
  ZElem alpha_in = {parse_ratfunc("-1", 2), RatFunc::zero(2)};
  auto tau = T.define_tau_alpha(alpha_in);
  auto rep = verify_group_action(T, sigma, tau,
                                 covers::groups::MetacyclicParams{2, 2, 2, 1});
  CHECK(rep.all_pass);
  auto alpha = alpha_of(T, tau);
  CHECK(alpha == T.from_base(parse_ratfunc("-1", 2)));
  CHECK(norm_alpha_identity(T, tau, alpha));

  // t = 1 cyclic tower: P = v and u = m = gcd(0, m)
  TowerSpec cyc;
  cyc.N = 3;
  cyc.m = 3;
  cyc.t = 1;
  cyc.r = 1;
  cyc.k = 3;
  cyc.f = parse_ratfunc("1", 3);
  cyc.g = {parse_ratfunc("y", 3)};
  TowerAlgebra C(cyc);
  auto tau1 = C.define_tau_alpha({parse_ratfunc("1", 3)});
  auto pd = p_power_descent(C, tau1);
  CHECK(pd.P == C.v());
  CHECK(pd.u == 3);
}

TEST_CASE("norm_to_base: worked examples") {
  auto build = d3_tower();
  const auto& T = build.algebra;
  // h = w: F = zeta_2^{1} f = -f
  auto Fw = norm_to_base(T, build.tau, T.w());
  CHECK(Fw.base_value() == -T.spec().f);
  // h in C(Y): F = h^t
  auto h = T.from_base(parse_ratfunc("y+2", 6));
  CHECK(norm_to_base(T, build.tau, h).base_value() ==
        parse_ratfunc("(y+2)^2", 6));
  // h = a + w = g: F = a^2 - f = 1
  auto Fg = norm_to_base(T, build.tau, T.from_z(T.spec().g));
  CHECK(Fg.base_value().is_one());
  // F is fixed by the induced tau action
  CHECK(T.apply(build.tau, Fg) == Fg);
  CHECK_THROWS_AS(norm_to_base(T, build.tau, T.v()), NotInZLevel);
}

TEST_CASE("inverse: zero divisor witness") {
  // C(Y)[w]/(w^2 - y^2): (w - y)(w + y) = 0
  TowerSpec spec;
  spec.N = 2;
  spec.m = 1;
  spec.t = 2;
  spec.r = 1;
  spec.k = 1;
  spec.f = parse_ratfunc("y^2", 2);
  spec.g = {parse_ratfunc("1", 2), RatFunc::zero(2)};
  TowerAlgebra T(spec);
  TowerElement wm = T.sub(T.w(), T.from_base(parse_ratfunc("y", 2)));
  try {
    T.inverse(wm);
    FAIL("expected NonInvertible");
  } catch (const NonInvertible& e) {
    CHECK(!e.witness.empty());
  }
  CHECK_THROWS_AS(T.inverse(T.zero()), covers::DivisionByZero);
}

TEST_CASE("automorphism application is a ring homomorphism on samples") {
  std::mt19937_64 rng(99);
  for (auto* build_fn : {&d3_tower, &q8_tower}) {
    auto build = build_fn();
    const auto& T = build.algebra;
    for (int trial = 0; trial < 50; ++trial) {
      auto x = random_element(T, rng);
      auto y = random_element(T, rng);
      for (const auto& phi : {build.sigma, build.tau}) {
        CHECK(T.apply(phi, T.mul(x, y)) ==
              T.mul(T.apply(phi, x), T.apply(phi, y)));
        CHECK(T.apply(phi, T.add(x, y)) ==
              T.add(T.apply(phi, x), T.apply(phi, y)));
      }
    }
  }
}

TEST_CASE("irreducibility_probe: worked examples") {
  long N = 1;
  // x^2 - y
  std::vector<RatFunc> m1 = {-parse_ratfunc("y", N), RatFunc::zero(N),
                             RatFunc::one(N)};
  auto p1 = irreducibility_probe(m1);
  CHECK(p1.squarefree);
  CHECK(!p1.root);
  CHECK(p1.verdict == "squarefree");

  // x^2 - y^2 has the root y
  std::vector<RatFunc> m2 = {-parse_ratfunc("y^2", N), RatFunc::zero(N),
                             RatFunc::one(N)};
  auto p2 = irreducibility_probe(m2);
  CHECK(p2.root);
  CHECK(p2.verdict == "has-root");

  // x^6 - 2y x^3 + 1
  auto build = d3_tower();
  auto p3 = irreducibility_probe(build.modulus);
  CHECK(p3.squarefree);
  CHECK(!p3.root);

  // (x - y)^2 is not squarefree
  std::vector<RatFunc> m4 = {parse_ratfunc("y^2", N), parse_ratfunc("-2*y", N),
                             RatFunc::one(N)};
  auto p4 = irreducibility_probe(m4);
  CHECK(!p4.squarefree);
  CHECK(p4.verdict == "has-root");  // root y is found
}
