#include <doctest.h>

#include <set>

#include "covers/decomp.hpp"

using namespace covers::decomp;
using covers::exact::Cyclotomic;
using covers::groups::Element;
using covers::groups::MetacyclicParams;

namespace {

MetacyclicParams dihedral(long n) { return MetacyclicParams{n, n, 2, n - 1}; }
const MetacyclicParams Q8{4, 2, 2, 3};
const MetacyclicParams G8423{8, 4, 2, 3};

long count_full(const DecompPlan& plan) {
  long c = 0;
  for (const auto& b : plan.blocks)
    if (b.kind == Block::Kind::Full) ++c;
  return c;
}

long count_descends(const DecompPlan& plan) {
  long c = 0;
  for (const auto& b : plan.blocks)
    if (b.kind == Block::Kind::Descends) ++c;
  return c;
}

}  // namespace

TEST_CASE("decomposition_plan: D_5 census") {
  auto plan = decomposition_plan(dihedral(5));
  CHECK(count_descends(plan) == 1);
  CHECK(count_full(plan) == 2);
  // the descends block is the orbit {0}: sections descend to Z
  for (const auto& b : plan.blocks)
    if (b.kind == Block::Kind::Descends) CHECK(b.orbit.rep == 0);
}

TEST_CASE("decomposition_plan: D_6 census") {
  auto plan = decomposition_plan(dihedral(6));
  CHECK(count_descends(plan) == 2);
  CHECK(count_full(plan) == 2);
  std::set<long> descend_reps;
  for (const auto& b : plan.blocks)
    if (b.kind == Block::Kind::Descends) descend_reps.insert(b.orbit.rep);
  CHECK(descend_reps == std::set<long>{0, 3});
}

TEST_CASE("decomposition_plan: Q8") {
  auto plan = decomposition_plan(Q8);
  CHECK(count_descends(plan) == 2);
  CHECK(count_full(plan) == 1);
  CHECK(plan.nu == 5);
  for (const auto& b : plan.blocks) {
    if (b.kind != Block::Kind::Full) continue;
    CHECK(b.orbit.elements == std::vector<long>{1, 3});
    CHECK(b.u_indices == std::vector<long>{1, 3});
    // theta = zeta_4^{1*2} = -1 = zeta_8^4
    CHECK(b.theta_exp == 4);
  }
}

TEST_CASE("rep_kernel: worked examples") {
  // trivial irrep: whole group
  auto irs = covers::reps::irreps(dihedral(6));
  const covers::reps::Irrep* triv = nullptr;
  const covers::reps::Irrep* orbit3_theta0 = nullptr;
  for (const auto& ir : irs) {
    if (ir.orbit.rep == 0 && ir.theta_exp == 0) triv = &ir;
    if (ir.orbit.rep == 3 && ir.theta_exp == 0) orbit3_theta0 = &ir;
  }
  REQUIRE(triv);
  REQUIRE(orbit3_theta0);
  CHECK(rep_kernel(dihedral(6), *triv).size() == 12);

  // D_6, orbit {3}, theta = 1: kernel is <sigma^2, tau> and contains sigma^2
  auto ker = rep_kernel(dihedral(6), *orbit3_theta0);
  std::set<Element> kset(ker.begin(), ker.end());
  CHECK(kset.count(Element{2, 0}) == 1);
  std::set<Element> H;  // <sigma^2, tau>
  for (long a = 0; a < 6; a += 2)
    for (long b = 0; b < 2; ++b) H.insert(Element{a, b});
  CHECK(kset == H);

  // Q8 faithful 2-dim irrep: trivial kernel
  for (const auto& ir : covers::reps::irreps(Q8))
    if (ir.dim == 2) CHECK(rep_kernel(Q8, ir).size() == 1);
}

TEST_CASE("corollary_counts: worked examples") {
  auto q8 = corollary_counts(Q8);
  CHECK(q8.b == 2);
  CHECK(q8.h == 1);
  auto g = corollary_counts(G8423);
  CHECK(g.b == 2);
  CHECK(g.h == 3);
  auto d7 = corollary_counts(dihedral(7));
  CHECK(d7.b == 1);
  CHECK(d7.h == 3);
  CHECK_THROWS_AS(corollary_counts(MetacyclicParams{5, 5, 4, 2}),
                  covers::NotPrime);
}

TEST_CASE("u_twist: worked examples") {
  // r = 1, k = m: identity twist with scalar 1
  auto t1 = u_twist(MetacyclicParams{4, 4, 1, 1}, 3);
  CHECK(t1.image == 3);
  CHECK(t1.t_power_scalar.is_one());

  auto t2 = u_twist(Q8, 1);
  CHECK(t2.image == 3);
  CHECK(t2.t_power_scalar ==
        Cyclotomic::from_rational(4, covers::exact::Rational(-1)));

  auto t3 = u_twist(G8423, 2);
  CHECK(t3.image == 6);
  CHECK(t3.t_power_scalar ==
        Cyclotomic::from_rational(8, covers::exact::Rational(-1)));
  // scalar order divides m/gcd(k, m)
  CHECK(*t3.t_power_scalar.multiplicative_order() == 2);
}

TEST_CASE("u_twist iterated t times returns to the source") {
  for (const auto& p : {Q8, G8423, dihedral(9)}) {
    for (long i = 0; i < p.m; ++i) {
      long idx = i;
      for (long step = 0; step < p.t; ++step) idx = u_twist(p, idx).image;
      CHECK(idx == i);
    }
  }
}

TEST_CASE("plans match the dihedral censuses for 3 <= n <= 20") {
  for (long n = 3; n <= 20; ++n) {
    auto plan = decomposition_plan(dihedral(n));
    if (n % 2 == 1) {
      CHECK(count_descends(plan) == 1);
      CHECK(count_full(plan) == (n - 1) / 2);
      CHECK(plan.nu == 2 + (n - 1) / 2);
    } else {
      CHECK(count_descends(plan) == 2);
      CHECK(count_full(plan) == (n - 2) / 2);
      CHECK(plan.nu == 4 + (n - 2) / 2);
    }
    // every descends kernel is a nontrivial normal subgroup here
    for (const auto& b : plan.blocks)
      if (b.kind == Block::Kind::Descends) CHECK(b.kernel.size() > 1);
  }
}

namespace {

MetabelianCoverData d3_cover_data() {
  MetabelianCoverData data;
  data.pres.sigma_orders = {3};
  data.pres.tau_orders = {2};
  data.pres.action = {{{2}}};
  data.pres.kvec = {{0}};
  // twist is i -> 2i mod 3: permutation [0, 2, 1]
  data.divisor_perm = {{0, 2, 1}};
  data.sheaf_perm = {{0, 2, 1}};
  data.scalars = {{{3, 0}}};  // zeta_3^0 = 1 since k = 0
  return data;
}

}  // namespace

TEST_CASE("check_metabelian_cover_data: D_3 fixtures") {
  auto good = d3_cover_data();
  auto rep = check_metabelian_cover_data(good);
  CHECK(rep.valid);

  auto bad_perm = d3_cover_data();
  bad_perm.divisor_perm = {{0, 1, 2}};  // identity: wrong for chi = (1)
  auto rep2 = check_metabelian_cover_data(bad_perm);
  CHECK(!rep2.divisor_perms_ok);
  CHECK(!rep2.valid);

  auto bad_scalar = d3_cover_data();
  bad_scalar.scalars = {{{3, 1}}};  // declared zeta_3 but k_{ij} = 0
  auto rep3 = check_metabelian_cover_data(bad_scalar);
  CHECK(!rep3.scalars_ok);
  CHECK(!rep3.valid);
}

TEST_CASE("check_metabelian_cover_data: Q8 as metabelian data") {
  MetabelianCoverData data;
  data.pres.sigma_orders = {4};
  data.pres.tau_orders = {2};
  data.pres.action = {{{3}}};
  data.pres.kvec = {{2}};
  data.divisor_perm = {{0, 3, 2, 1}};  // i -> 3i mod 4
  data.sheaf_perm = {{0, 3, 2, 1}};
  data.scalars = {{{4, 2}}};  // zeta_4^2 = -1
  CHECK(check_metabelian_cover_data(data).valid);
  // declared as zeta_2^1: same value, still accepted
  data.scalars = {{{2, 1}}};
  CHECK(check_metabelian_cover_data(data).valid);
}

TEST_CASE("q_level_check: worked examples") {
  covers::pardini::PicardModel pic{1, {}};
  using covers::pardini::PicClass;
  CHECK(q_level_check(pic, 2, PicClass{{1}}, {PicClass{{2}}}).pass);
  CHECK(!q_level_check(pic, 3, PicClass{{1}}, {PicClass{{2}}}).pass);
  CHECK(q_level_check(pic, 1, PicClass{{0}}, {}).pass);  // trivial N
}
