#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covers/errors.hpp"
#include "covers/rational.hpp"

namespace covers::groups {

// Presentation <sigma, tau | sigma^m = 1, sigma^k = tau^t, sigma tau = tau sigma^r>
// with r^t = 1 (mod m), k r = k (mod m), gcd(r, m) = 1. k is stored in
// [1, m]; k = m is the split case tau^t = 1.
struct MetacyclicParams {
  long m = 1;
  long k = 1;
  long t = 1;
  long r = 1;
};

// Normal form sigma^a tau^b, a in [0,m), b in [0,t).
struct Element {
  long a = 0;
  long b = 0;
  bool operator==(const Element&) const = default;
  bool operator<(const Element& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
};

struct MetacyclicReport {
  bool ranges_ok = false;      // m,t >= 1, k,r in [1,m]
  bool cond_r_pow_t = false;   // r^t = 1 (mod m)
  bool cond_k_r = false;       // k r = k (mod m)
  bool cond_gcd_r_m = false;   // gcd(r, m) = 1
  bool valid = false;
  bool split = false;          // k = m
  bool abelian = false;        // r = 1 (mod m)
  bool cyclic_flag = false;    // gcd(k, m) = 1 forces a cyclic group
  // heuristic: no proper divisor t' of t admits a compatible k'
  bool t_minimal_heuristic = false;
  std::vector<std::string> failures;  // paper-style symbols for failed conditions
};

MetacyclicReport validate_metacyclic(const MetacyclicParams& p);

// throws InvalidParams if p does not validate
void require_valid(const MetacyclicParams& p);

Element mc_identity();
Element mc_mul(const MetacyclicParams& p, const Element& g, const Element& h);
Element mc_inv(const MetacyclicParams& p, const Element& g);
long mc_order(const MetacyclicParams& p, const Element& g);

// All mt elements in index order a*t + b.
std::vector<Element> mc_elements(const MetacyclicParams& p);

// Brute-force conjugacy classes, each sorted, classes ordered by least
// element. Throws BoundExceeded when mt exceeds the bound.
std::vector<std::vector<Element>> conjugacy_classes(const MetacyclicParams& p,
                                                    long bound = 4096);

// Exhaustive isomorphism test for orders <= bound; order histograms first,
// then generator-image search. Throws OrderMismatch on |G1| != |G2|.
bool iso_check(const MetacyclicParams& p1, const MetacyclicParams& p2,
               long bound = 64);

// General metabelian presentation
//   sigma_i^{m_i} = 1, sigma's commute, tau's commute,
//   tau_j^{-1} sigma_i tau_j = prod_u sigma_u^{(M_j)_{u,i}},
//   tau_j^{a_j} = prod_u sigma_u^{k_{u,j}}.
struct MetabelianPresentation {
  std::vector<long> sigma_orders;                        // m_1..m_s
  std::vector<long> tau_orders;                          // a_1..a_l
  std::vector<std::vector<std::vector<long>>> action;    // per j: s x s matrix
  std::vector<std::vector<long>> kvec;                   // per j: s-vector
};

struct MetaElement {
  std::vector<long> avec;
  std::vector<long> bvec;
  bool operator==(const MetaElement&) const = default;
};

struct MetabelianReport {
  bool shapes_ok = false;
  bool well_defined = false;      // m_u | M_{u,i} * m_i
  bool automorphisms = false;     // each M_j bijective on A
  bool powers_identity = false;   // M_j^{a_j} = id
  bool commuting = false;         // M_i M_j = M_j M_i on A
  bool kvec_fixed = false;        // M_j k_{.,j'} = k_{.,j'}
  bool associative = false;
  bool valid = false;
  std::vector<std::string> failures;
};

// Full consistency check; builds the multiplication table and verifies
// associativity exhaustively for group order <= 512, by random sampling
// (>= 1e5 triples) above. Throws nothing; failures land in the report.
MetabelianReport validate_metabelian(const MetabelianPresentation& pres);

void require_valid(const MetabelianPresentation& pres);

MetaElement mb_identity(const MetabelianPresentation& pres);
MetaElement mb_mul(const MetabelianPresentation& pres, const MetaElement& g,
                   const MetaElement& h);
long mb_order(const MetabelianPresentation& pres, const MetaElement& g);
long mb_group_order(const MetabelianPresentation& pres);

// Metacyclic data as the s = l = 1 metabelian presentation.
MetabelianPresentation as_metabelian(const MetacyclicParams& p);

}  // namespace covers::groups
