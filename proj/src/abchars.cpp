#include "covers/abchars.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "covers/smith.hpp"

namespace covers::abchars {

using exact::Cyclotomic;
using exact::Int;

AbChar trivial_char(const FiniteAbelianGroup& A) {
  AbChar c;
  c.exponents.assign(A.factors.size(), 0);
  return c;
}

std::vector<AbChar> all_chars(const FiniteAbelianGroup& A) {
  std::vector<AbChar> out;
  out.reserve(A.order());
  for (long i = 0; i < A.order(); ++i) out.push_back(char_at(A, i));
  return out;
}

long char_index(const FiniteAbelianGroup& A, const AbChar& chi) {
  long idx = 0;
  for (size_t i = 0; i < A.factors.size(); ++i)
    idx = idx * A.factors[i] + chi.exponents[i];
  return idx;
}

AbChar char_at(const FiniteAbelianGroup& A, long index) {
  AbChar chi;
  chi.exponents.assign(A.factors.size(), 0);
  for (size_t i = A.factors.size(); i-- > 0;) {
    chi.exponents[i] = index % A.factors[i];
    index /= A.factors[i];
  }
  return chi;
}

Cyclotomic char_eval(const FiniteAbelianGroup& A, const AbChar& chi,
                     const std::vector<long>& g) {
  long L = A.lcm_exponent();
  __int128 e = 0;
  for (size_t u = 0; u < A.factors.size(); ++u) {
    long m = A.factors[u];
    long gu = ((g[u] % m) + m) % m;
    e += (__int128)(L / m) * chi.exponents[u] % L * gu % L;
  }
  return Cyclotomic::root_of_unity(L, (long)(((e % L) + L) % L));
}

AbChar char_mul(const FiniteAbelianGroup& A, const AbChar& a, const AbChar& b) {
  AbChar c;
  c.exponents.resize(A.factors.size());
  for (size_t u = 0; u < A.factors.size(); ++u)
    c.exponents[u] = (a.exponents[u] + b.exponents[u]) % A.factors[u];
  return c;
}

AbChar char_inv(const FiniteAbelianGroup& A, const AbChar& a) {
  AbChar c;
  c.exponents.resize(A.factors.size());
  for (size_t u = 0; u < A.factors.size(); ++u)
    c.exponents[u] = (A.factors[u] - a.exponents[u]) % A.factors[u];
  return c;
}

AbChar twist_char(const groups::MetabelianPresentation& pres, const AbChar& chi,
                  long j, long gamma) {
  const auto& mo = pres.sigma_orders;
  long s = (long)mo.size();
  long aj = pres.tau_orders[j];
  long g = ((gamma % aj) + aj) % aj;  // M_j^{a_j} = id
  // columns of M_j^g
  std::vector<std::vector<long>> M(s, std::vector<long>(s, 0));
  for (long u = 0; u < s; ++u) M[u][u] = 1 % mo[u];
  for (long e = 0; e < g; ++e) {
    std::vector<std::vector<long>> C(s, std::vector<long>(s, 0));
    for (long u = 0; u < s; ++u)
      for (long i = 0; i < s; ++i) {
        __int128 acc = 0;
        for (long w = 0; w < s; ++w)
          acc += (__int128)pres.action[j][u][w] * M[w][i];
        C[u][i] = (long)(((acc % mo[u]) + mo[u]) % mo[u]);
      }
    M = C;
  }
  long L = 1;
  for (long m : mo) L = exact::lcm_ll(L, m);
  AbChar out;
  out.exponents.resize(s);
  for (long u = 0; u < s; ++u) {
    // chi evaluated at the image of sigma_u must be an m_u-th root of unity
    __int128 e = 0;
    for (long w = 0; w < s; ++w)
      e += (__int128)(L / mo[w]) * chi.exponents[w] % L * M[w][u] % L;
    long ev = (long)(((e % L) + L) % L);
    long step = L / mo[u];
    if (ev % step != 0)
      throw InternalError("twist_char: twisted value not an m_u-th root of unity");
    out.exponents[u] = (ev / step) % mo[u];
  }
  return out;
}

std::vector<long> kummer_subgroup(const std::vector<FactoredElement>& elements,
                                  long n) {
  if (n < 2) throw InvalidParams("kummer_subgroup requires n >= 2");
  std::set<std::string> alphabet;
  for (const auto& el : elements)
    for (const auto& [label, e] : el) alphabet.insert(label);
  std::vector<std::string> labels(alphabet.begin(), alphabet.end());
  size_t L = labels.size();
  if (L == 0) return {};  // only n-th powers of constants: trivial group

  auto col = [&](const std::string& s) {
    return (size_t)(std::lower_bound(labels.begin(), labels.end(), s) -
                    labels.begin());
  };
  // lattice generated by the exponent rows together with n Z^L;
  // Delta = Lambda / n Z^L and d_i | n for every SNF divisor
  std::vector<std::vector<Int>> mat;
  for (const auto& el : elements) {
    std::vector<Int> row(L, Int(0));
    for (const auto& [label, e] : el) row[col(label)] += e;
    mat.push_back(std::move(row));
  }
  for (size_t j = 0; j < L; ++j) {
    std::vector<Int> row(L, Int(0));
    row[j] = n;
    mat.push_back(std::move(row));
  }
  auto diag = exact::smith_diagonal(std::move(mat));
  std::vector<long> invariants;
  for (size_t i = L; i-- > 0;) {
    const Int& d = diag[i];
    if (d == 0 || Int(n) % d != 0)
      throw InternalError("kummer_subgroup: SNF divisor does not divide n");
    Int f = Int(n) / d;
    if (f > 1) invariants.push_back(f.convert_to<long>());
  }
  // ascending divisibility: n/d_L | n/d_{L-1} | ...
  return invariants;
}

}  // namespace covers::abchars
