#pragma once

#include <string>
#include <vector>

#include "covers/pardini.hpp"
#include "covers/reps.hpp"

namespace covers::decomp {

using groups::Element;
using groups::MetacyclicParams;
using reps::Irrep;
using reps::OrbitData;

// One summand of pi_* O_X. A Full block (orbit size = t) is the eigensheaf
// U_{l} + U_{rl} + ... of the irrep T_{zeta,zeta^k}; a Descends block
// (orbit size < t) collects the eigenspaces that factor through an
// intermediate cover, recorded by the common representation kernel.
struct Block {
  enum class Kind { Full, Descends };
  Kind kind = Kind::Full;
  OrbitData orbit;
  // Full
  std::vector<long> u_indices;  // l, rl, ..., r^{t-1} l (mod m)
  long theta_exp = 0;           // zeta_{mt} exponent of theta = zeta^k
  // Descends
  std::vector<Element> kernel;  // intersection of the orbit's irrep kernels
  long quotient_order = 1;
};

struct DecompPlan {
  MetacyclicParams params;
  long nu = 0;  // number of irreps
  std::vector<Block> blocks;
};

DecompPlan decomposition_plan(const MetacyclicParams& p);

// All g with T(g) = identity, as normal forms; verified to be a normal
// subgroup. Throws BoundExceeded past the bound.
std::vector<Element> rep_kernel(const MetacyclicParams& p, const Irrep& irrep,
                                long bound = 4096);

struct CorollaryCounts {
  long b = 0;  // gcd(r-1, m) = number of singleton orbits
  long h = 0;  // (m-b)/t = number of full orbits
};

// Requires t prime; asserts integrality of h and the orbit census.
CorollaryCounts corollary_counts(const MetacyclicParams& p);

struct UTwist {
  long source = 0;
  long image = 0;  // r*i mod m
  exact::Cyclotomic t_power_scalar;  // zeta_m^k
};

UTwist u_twist(const MetacyclicParams& p, long i);

// Combinatorial data of a metabelian cover: per tau-generator permutations
// of the character index set (divisor level and sheaf level) and declared
// scalars for the tau_j^{a_j} action on sections.
struct MetabelianCoverData {
  groups::MetabelianPresentation pres;
  // per j: permutation over lexicographic character indices
  std::vector<std::vector<long>> divisor_perm;
  std::vector<std::vector<long>> sheaf_perm;
  // per (i, j), i = sigma index: declared scalar as (zeta order, exponent)
  std::vector<std::vector<std::pair<long, long>>> scalars;
};

struct CoverDataReport {
  bool divisor_perms_ok = false;
  bool sheaf_perms_ok = false;
  bool scalars_ok = false;
  bool valid = false;
  std::vector<std::string> mismatches;
};

CoverDataReport check_metabelian_cover_data(const MetabelianCoverData& data);

struct QLevelReport {
  bool pass = false;
  std::vector<std::string> violations;
};

// Fundamental-relation check for the degree-t level of the tower: cyclic
// instance with one generator class and full-inertia branch classes,
// delegated to pardini::check_fundamental. t = 1 passes vacuously.
QLevelReport q_level_check(const pardini::PicardModel& pic, long t,
                           const pardini::PicClass& L_gen,
                           const std::vector<pardini::PicClass>& B);

}  // namespace covers::decomp
