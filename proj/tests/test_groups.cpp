#include <doctest.h>

#include <map>
#include <set>

#include "covers/groups.hpp"

using namespace covers::groups;
using covers::exact::gcd_ll;

namespace {

const MetacyclicParams D3{3, 3, 2, 2};
const MetacyclicParams Q8{4, 2, 2, 3};
const MetacyclicParams G8423{8, 4, 2, 3};

std::vector<MetacyclicParams> valid_params_upto(long max_order) {
  std::vector<MetacyclicParams> out;
  for (long m = 1; m <= max_order; ++m)
    for (long t = 1; m * t <= max_order; ++t)
      for (long r = 1; r <= m; ++r)
        for (long k = 1; k <= m; ++k) {
          MetacyclicParams p{m, k, t, r};
          if (validate_metacyclic(p).valid) out.push_back(p);
        }
  return out;
}

}  // namespace

TEST_CASE("validation: worked examples") {
  auto d3 = validate_metacyclic(D3);
  CHECK(d3.valid);
  CHECK(d3.split);
  CHECK(!d3.abelian);
  CHECK(!d3.cyclic_flag);

  auto q8 = validate_metacyclic(Q8);
  CHECK(q8.valid);
  CHECK(!q8.split);
  CHECK(!q8.abelian);

  auto bad = validate_metacyclic(MetacyclicParams{5, 5, 2, 3});
  CHECK(!bad.valid);  // 3^2 = 9 is not 1 mod 5
  CHECK(!bad.cond_r_pow_t);

  // out-of-range inputs are rejected, never normalized
  CHECK(!validate_metacyclic(MetacyclicParams{4, 5, 2, 3}).valid);
  CHECK(!validate_metacyclic(MetacyclicParams{4, 2, 2, 0}).valid);
}

TEST_CASE("mc_mul: worked examples") {
  Element id{0, 0};
  Element g{2, 1};
  CHECK(mc_mul(D3, id, g) == g);
  CHECK(mc_mul(D3, g, id) == g);
  // D_3: tau sigma = sigma^2 tau
  CHECK(mc_mul(D3, Element{0, 1}, Element{1, 0}) == Element{2, 1});
  // Q8: tau^2 = sigma^2
  CHECK(mc_mul(Q8, Element{0, 1}, Element{0, 1}) == Element{2, 0});
}

TEST_CASE("mc_order: worked examples") {
  CHECK(mc_order(D3, Element{0, 0}) == 1);
  CHECK(mc_order(Q8, Element{0, 1}) == 4);  // mt/gcd(k,m) = 8/2
  CHECK(mc_order(G8423, Element{1, 0}) == 8);
}

TEST_CASE("conjugacy classes: worked examples") {
  CHECK(conjugacy_classes(D3).size() == 3);
  CHECK(conjugacy_classes(Q8).size() == 5);
  CHECK(conjugacy_classes(G8423).size() == 7);
  CHECK_THROWS_AS(conjugacy_classes(MetacyclicParams{80, 80, 2, 79}, 100),
                  covers::BoundExceeded);
}

TEST_CASE("group axioms for all valid parameters with mt <= 144") {
  long assoc_failures = 0, inverse_failures = 0, order_failures = 0;
  for (const auto& p : valid_params_upto(144)) {
    long mt = p.m * p.t;
    Element id{0, 0};
    if (mt <= 64) {
      // exhaustive associativity via a precomputed table
      auto all = mc_elements(p);
      std::vector<long> tab(mt * mt);
      for (long x = 0; x < mt; ++x)
        for (long y = 0; y < mt; ++y) {
          Element e = mc_mul(p, all[x], all[y]);
          tab[x * mt + y] = e.a * p.t + e.b;
        }
      for (long x = 0; x < mt; ++x)
        for (long y = 0; y < mt; ++y)
          for (long z = 0; z < mt; ++z)
            if (tab[tab[x * mt + y] * mt + z] != tab[x * mt + tab[y * mt + z]])
              ++assoc_failures;
    }
    for (const auto& x : mc_elements(p)) {
      if (!(mc_mul(p, x, mc_inv(p, x)) == id)) ++inverse_failures;
      if (!(mc_mul(p, mc_inv(p, x), x) == id)) ++inverse_failures;
    }
    // ord(tau) = mt/gcd(k,m)
    if (mc_order(p, Element{0, p.t > 1 ? 1 : 0}) !=
        (p.t > 1 ? p.m * p.t / gcd_ll(p.k, p.m) : 1))
      ++order_failures;
  }
  CHECK(assoc_failures == 0);
  CHECK(inverse_failures == 0);
  CHECK(order_failures == 0);
}

TEST_CASE("ord(tau) formula also at t = 1") {
  // tau = sigma^k when t = 1
  for (const auto& p : valid_params_upto(40)) {
    if (p.t != 1) continue;
    long expect = p.k % p.m == 0 ? 1 : p.m / gcd_ll(p.k, p.m);
    CHECK(mc_order(p, mc_mul(p, Element{p.k % p.m, 0}, Element{0, 0})) == expect);
  }
}

TEST_CASE("commutativity iff r = 1 (mod m), mt <= 100") {
  for (const auto& p : valid_params_upto(100)) {
    bool commutative = true;
    auto all = mc_elements(p);
    for (const auto& x : all) {
      for (const auto& y : all)
        if (!(mc_mul(p, x, y) == mc_mul(p, y, x))) {
          commutative = false;
          break;
        }
      if (!commutative) break;
    }
    CHECK(commutative == ((p.r - 1) % p.m == 0));
  }
}

TEST_CASE("gcd(k,m) = 1 forces a cyclic group, mt <= 100") {
  for (const auto& p : valid_params_upto(100)) {
    if (gcd_ll(p.k, p.m) != 1) continue;
    bool cyclic = false;
    for (const auto& g : mc_elements(p))
      if (mc_order(p, g) == p.m * p.t) {
        cyclic = true;
        break;
      }
    CHECK(cyclic);
  }
}

TEST_CASE("iso_check: worked examples") {
  CHECK(iso_check(D3, D3));
  // D_3 vs Z_6
  CHECK(!iso_check(D3, MetacyclicParams{6, 6, 1, 1}));
  // Q8 vs D_4: distinct order histograms (Q8 has one element of order 2)
  CHECK(!iso_check(Q8, MetacyclicParams{4, 4, 2, 3}));
  CHECK_THROWS_AS(iso_check(D3, Q8), covers::OrderMismatch);
}

TEST_CASE("iso_check finds nontrivial isomorphisms") {
  // split metacyclic with r and r^{-1} give isomorphic groups
  CHECK(iso_check(MetacyclicParams{7, 7, 3, 2}, MetacyclicParams{7, 7, 3, 4}));
}

TEST_CASE("metabelian validation: worked examples") {
  // D_3 as metabelian data
  MetabelianPresentation d3;
  d3.sigma_orders = {3};
  d3.tau_orders = {2};
  d3.action = {{{2}}};
  d3.kvec = {{0}};
  CHECK(validate_metabelian(d3).valid);

  // order-8 wreath-like group: Z2 x Z2 with swap action
  MetabelianPresentation wreath;
  wreath.sigma_orders = {2, 2};
  wreath.tau_orders = {2};
  wreath.action = {{{0, 1}, {1, 0}}};
  wreath.kvec = {{0, 0}};
  CHECK(validate_metabelian(wreath).valid);

  // 2 is not a unit mod 4
  MetabelianPresentation bad;
  bad.sigma_orders = {4};
  bad.tau_orders = {2};
  bad.action = {{{2}}};
  bad.kvec = {{0}};
  auto rep = validate_metabelian(bad);
  CHECK(!rep.valid);
  CHECK(!rep.automorphisms);
}

TEST_CASE("mb_mul: worked examples") {
  MetabelianPresentation d3;
  d3.sigma_orders = {3};
  d3.tau_orders = {2};
  d3.action = {{{2}}};
  d3.kvec = {{0}};
  MetaElement id = mb_identity(d3);
  MetaElement g{{2}, {1}};
  CHECK(mb_mul(d3, id, g) == g);
  // tau sigma = sigma^2 tau, matching the metacyclic normal form
  CHECK(mb_mul(d3, MetaElement{{0}, {1}}, MetaElement{{1}, {0}}) ==
        (MetaElement{{2}, {1}}));

  MetabelianPresentation wreath;
  wreath.sigma_orders = {2, 2};
  wreath.tau_orders = {2};
  wreath.action = {{{0, 1}, {1, 0}}};
  wreath.kvec = {{0, 0}};
  // tau sigma_1 = sigma_2 tau
  CHECK(mb_mul(wreath, MetaElement{{0, 0}, {1}}, MetaElement{{1, 0}, {0}}) ==
        (MetaElement{{0, 1}, {1}}));
}

TEST_CASE("metabelian accepts every valid metacyclic re-encoding, mt <= 60") {
  for (const auto& p : valid_params_upto(60)) {
    auto pres = as_metabelian(p);
    CHECK(validate_metabelian(pres).valid);
    // multiplication agrees with the metacyclic normal form
    for (long a1 = 0; a1 < p.m; ++a1)
      for (long b1 = 0; b1 < p.t; ++b1) {
        Element x{a1, b1};
        Element y{(a1 * 5 + 1) % p.m, (b1 + 1) % p.t};
        Element xy = mc_mul(p, x, y);
        MetaElement mx{{x.a}, {x.b}};
        MetaElement my{{y.a}, {y.b}};
        MetaElement mxy = mb_mul(pres, mx, my);
        CHECK(mxy.avec[0] == xy.a);
        CHECK(mxy.bvec[0] == xy.b);
      }
  }
}

TEST_CASE("metabelian sampling path for orders above 512") {
  // Z_3^2 x Z_2 wreath-ish data of order 1152 goes through sampling
  MetabelianPresentation big;
  big.sigma_orders = {24, 24};
  big.tau_orders = {2};
  big.action = {{{0, 1}, {1, 0}}};
  big.kvec = {{0, 0}};
  CHECK(validate_metabelian(big).valid);
}
