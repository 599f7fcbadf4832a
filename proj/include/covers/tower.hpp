#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covers/groups.hpp"
#include "covers/ratfunc.hpp"

namespace covers::funfield {

// Zero modulus or other unusable tower input.
struct ZeroModulus : Error {
  explicit ZeroModulus(const std::string& what) : Error(what) {}
};

struct NotInvariant : Error {
  explicit NotInvariant(const std::string& what) : Error(what) {}
};

struct NotInZLevel : Error {
  explicit NotInZLevel(const std::string& what) : Error(what) {}
};

struct ConstraintViolated : Error {
  explicit ConstraintViolated(const std::string& what) : Error(what) {}
};

class TowerElement;

// Witness-carrying inversion failure: the algebra C(Y)[w,v]/(w^t-f, v^m-g)
// need not be a field; a singular multiplication map yields a zero divisor.
struct NonInvertible : Error {
  explicit NonInvertible(const std::string& what) : Error(what) {}
  NonInvertible(const std::string& what, std::string witness_repr)
      : Error(what + " (zero divisor witness: " + witness_repr + ")"),
        witness(std::move(witness_repr)) {}
  std::string witness;
};

// C(Y)[w]/(w^t - f) element: t rational-function coefficients.
using ZElem = std::vector<RatFunc>;

// Quotient algebra C(Y)[w]/(w^t - f)[v]/(v^m - g) with the Galois data of
// G_{m,k,t,r} carried alongside. N is the cyclotomic coefficient order and
// must be divisible by lcm(m, t).
struct TowerSpec {
  long N = 1;
  long m = 1;
  long t = 1;
  long r = 1;
  long k = 1;
  RatFunc f;  // w^t = f, f in C(Y), f != 0
  ZElem g;    // v^m = g, g in C(Z), g != 0
};

class TowerAlgebra;

// Element sum c_{ij} v^i w^j, coefficients in C(Y): an m x t array.
class TowerElement {
 public:
  TowerElement() = default;
  TowerElement(long m, long t, long order);

  RatFunc& at(long i, long j) { return c_[i][j]; }
  const RatFunc& at(long i, long j) const { return c_[i][j]; }
  long vdim() const { return (long)c_.size(); }
  long wdim() const { return c_.empty() ? 0 : (long)c_[0].size(); }

  bool is_zero() const;
  bool in_z_level() const;    // no v-components
  bool in_base_field() const; // only the (0,0) coefficient
  RatFunc base_value() const; // requires in_base_field()

  bool operator==(const TowerElement&) const = default;

  std::string str() const;

 private:
  std::vector<std::vector<RatFunc>> c_;
};

// Ring endomorphism given on the generators; coefficients in C(Y) are fixed.
struct TowerAuto {
  TowerElement image_of_v;
  TowerElement image_of_w;
};

class TowerAlgebra {
 public:
  explicit TowerAlgebra(TowerSpec spec);  // validates; throws ZeroModulus/InvalidParams

  const TowerSpec& spec() const { return spec_; }
  long dim() const { return spec_.m * spec_.t; }

  TowerElement zero() const;
  TowerElement one() const;
  TowerElement from_base(const RatFunc& f) const;
  TowerElement from_z(const ZElem& z) const;
  TowerElement v() const;
  TowerElement w() const;

  TowerElement add(const TowerElement& a, const TowerElement& b) const;
  TowerElement sub(const TowerElement& a, const TowerElement& b) const;
  TowerElement mul(const TowerElement& a, const TowerElement& b) const;
  TowerElement scale(const RatFunc& c, const TowerElement& a) const;
  TowerElement pow(const TowerElement& a, long e) const;
  // Solves the multiplication linear system over C(Y); throws NonInvertible
  // with a zero-divisor witness when the element is not a unit.
  TowerElement inverse(const TowerElement& a) const;

  Cyclotomic zeta_m() const;  // primitive m-th root in order N
  Cyclotomic zeta_t() const;

  TowerElement apply(const TowerAuto& phi, const TowerElement& x) const;
  TowerAuto compose(const TowerAuto& phi, const TowerAuto& psi) const;  // phi after psi

  // sigma: v -> zeta_m v, w -> w
  TowerAuto define_sigma() const;
  // tau: v -> alpha * v^r, w -> zeta_t w, alpha in the Z-level
  TowerAuto define_tau_alpha(const ZElem& alpha) const;
  // tau: v -> P / v, w -> zeta_t w; requires v invertible and m | r+1
  TowerAuto define_tau_p(const ZElem& P) const;

 private:
  ZElem zmul(const ZElem& a, const ZElem& b) const;
  TowerSpec spec_;
};

struct ActionCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ActionReport {
  std::vector<ActionCheck> checks;
  bool all_pass = false;
};

// Checks, on the generators v and w: ring-hom consistency with the moduli
// (sigma(v)^m = sigma(g), tau(w)^t = tau(f), ...), sigma^m = id,
// tau^t = sigma^k and sigma tau = tau sigma^r under (phi o psi)(x) = phi(psi(x)).
ActionReport verify_group_action(const TowerAlgebra& T, const TowerAuto& sigma,
                                 const TowerAuto& tau,
                                 const groups::MetacyclicParams& p);

// alpha = tau(v) v^{-r}; asserts sigma-invariance (Z-level membership).
TowerElement alpha_of(const TowerAlgebra& T, const TowerAuto& tau);

// Checks N_alpha g^c = zeta_m^k with N_alpha = prod tau^i(alpha)^{r^{t-1-i}}
// and c = (r^t - 1)/m.
bool norm_alpha_identity(const TowerAlgebra& T, const TowerAuto& tau,
                         const TowerElement& alpha);

// F = h tau(h) ... tau^{t-1}(h) for h in the Z-level; lands in C(Y).
TowerElement norm_to_base(const TowerAlgebra& T, const TowerAuto& tau,
                          const TowerElement& h);

struct PDescent {
  TowerElement P;  // v tau(v) ... tau^{t-1}(v)
  long u = 1;      // least u with P^u in C(Y); divides gcd(r-1, m)
};

PDescent p_power_descent(const TowerAlgebra& T, const TowerAuto& tau);

struct TowerBuild {
  TowerAlgebra algebra;
  TowerAuto sigma;
  TowerAuto tau;
  ActionReport report;
  std::vector<RatFunc> modulus;  // minimal-equation coefficients in x
  bool modulus_holds = false;    // the relation vanishes identically
};

// t = 2 family with tau(x) = P/x, supported for m | r+1. f = a^2 - P^m is
// computed when P in C(Y); for P with a w-component the caller supplies f
// and the identity is verified instead.
TowerBuild t2_build(long m, long k, long r, const RatFunc& a, const ZElem& P,
                    const std::optional<RatFunc>& f_given = std::nullopt);

// Dicyclic family G_{2n,n,2,-1}: g = c + d w, w^2 = f, tau(x) = w/x;
// requires f^n = c^2 - d^2 f exactly.
TowerBuild dicyclic_build(long n, const RatFunc& c, const RatFunc& d,
                          const RatFunc& f);

struct IrreducibilityProbe {
  bool squarefree = false;
  std::optional<RatFunc> root;  // a linear factor witness, if found
  std::string verdict;          // "has-root" | "squarefree" | "unknown"
};

// gcd-with-derivative squarefreeness plus a low-height candidate root scan;
// never claims irreducibility.
IrreducibilityProbe irreducibility_probe(const std::vector<RatFunc>& modulus);

}  // namespace covers::funfield
