#pragma once

#include <string>
#include <vector>

#include "covers/cyclotomic.hpp"
#include "covers/groups.hpp"

namespace covers::reps {

using exact::Cyclotomic;
using exact::Rational;
using groups::Element;
using groups::MetacyclicParams;

// Orbit of zeta_m^{l} under zeta -> zeta^r; rep is the minimal exponent.
struct OrbitData {
  long rep = 0;
  long size = 1;
  std::vector<long> elements;  // sorted exponents
  bool operator==(const OrbitData&) const = default;
};

// Full partition of {0..m-1} under multiplication by r, ordered by rep.
std::vector<OrbitData> orbits(long m, long r);

// All theta exponents j mod mt solving j (t / t(zeta)) = k l t (mod mt);
// there are exactly t / t(zeta) of them.
std::vector<long> thetas(const MetacyclicParams& p, const OrbitData& orbit);

struct Irrep {
  OrbitData orbit;
  long theta_exp = 0;  // theta = zeta_{mt}^{theta_exp}
  long dim = 1;        // = orbit.size
};

// One irrep per (orbit, theta) pair; nu = result.size() matches
// t * sum 1/t(zeta_i), and sum dim^2 = mt (asserted).
std::vector<Irrep> irreps(const MetacyclicParams& p);

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

struct RepMatrices {
  CycMatrix Tsigma;  // diag(zeta, zeta^r, ..., zeta^{r^{d-1}})
  CycMatrix Ttau;    // subdiagonal 1s, theta in the upper-right corner
};

RepMatrices rep_matrices(const MetacyclicParams& p, const Irrep& irrep);

// T(sigma)^m = I, T(tau)^t = T(sigma)^k, T(sigma) T(tau) = T(tau) T(sigma)^r
// in exact arithmetic.
bool verify_rep(const MetacyclicParams& p, const RepMatrices& M);

// (1/mt) sum_g trace(T1(g)) conj(trace(T2(g))) over normal forms
// g = sigma^a tau^b; 1 iff equivalent irreducibles, 0 iff inequivalent.
Rational char_inner(const MetacyclicParams& p, const Irrep& i1, const Irrep& i2,
                    long bound = 512);

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b);
CycMatrix mat_pow(const CycMatrix& a, long e, long order);
CycMatrix mat_identity(long dim, long order);
bool mat_eq(const CycMatrix& a, const CycMatrix& b);
Cyclotomic mat_trace(const CycMatrix& a, long order);

// Character table rows: one per irrep; columns: conjugacy classes by least
// representative; entries exact.
struct CharTable {
  std::vector<std::vector<Element>> classes;
  std::vector<Irrep> rows;
  std::vector<std::vector<Cyclotomic>> values;
};

CharTable character_table(const MetacyclicParams& p, long bound = 512);

}  // namespace covers::reps
