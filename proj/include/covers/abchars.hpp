#pragma once

#include <string>
#include <utility>
#include <vector>

#include "covers/cyclotomic.hpp"
#include "covers/groups.hpp"

namespace covers::abchars {

// Finite abelian group as a product of cyclic factors; elements are
// exponent vectors mod the factors.
struct FiniteAbelianGroup {
  std::vector<long> factors;

  long order() const {
    long n = 1;
    for (long m : factors) n *= m;
    return n;
  }
  long lcm_exponent() const {
    long l = 1;
    for (long m : factors) l = exact::lcm_ll(l, m);
    return l;
  }
  long element_count() const { return order(); }
};

// chi(sigma_u) = zeta_{m_u}^{e_u}
struct AbChar {
  std::vector<long> exponents;
  bool operator==(const AbChar&) const = default;
  bool operator<(const AbChar& o) const { return exponents < o.exponents; }
};

AbChar trivial_char(const FiniteAbelianGroup& A);

// All |A| characters in lexicographic exponent order.
std::vector<AbChar> all_chars(const FiniteAbelianGroup& A);

// Lexicographic index <-> character.
long char_index(const FiniteAbelianGroup& A, const AbChar& chi);
AbChar char_at(const FiniteAbelianGroup& A, long index);

// prod_u zeta_{m_u}^{e_u g_u}, expressed in order lcm(m_u).
exact::Cyclotomic char_eval(const FiniteAbelianGroup& A, const AbChar& chi,
                            const std::vector<long>& g);

AbChar char_mul(const FiniteAbelianGroup& A, const AbChar& a, const AbChar& b);
AbChar char_inv(const FiniteAbelianGroup& A, const AbChar& a);

// chi^{(gamma)}_j = chi composed with M_j^gamma (conjugation of A by tau_j^gamma).
AbChar twist_char(const groups::MetabelianPresentation& pres, const AbChar& chi,
                  long j, long gamma);

// Kummer data: pre-factored elements of K^* over an abstract label alphabet,
// constants ignored. Returns the invariant factors (each dividing the next,
// 1s dropped) of the subgroup of K^*/(K^*)^n the elements generate.
using FactoredElement = std::vector<std::pair<std::string, long>>;

std::vector<long> kummer_subgroup(const std::vector<FactoredElement>& elements,
                                  long n);

}  // namespace covers::abchars
