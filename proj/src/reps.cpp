#include "covers/reps.hpp"

#include <algorithm>
#include <numeric>

namespace covers::reps {

using exact::gcd_ll;
using exact::powmod_ll;

std::vector<OrbitData> orbits(long m, long r) {
  if (m < 1 || gcd_ll(r, m) != 1)
    throw InvalidParams("orbits: need m >= 1 and gcd(r, m) = 1");
  std::vector<char> seen(m, 0);
  std::vector<OrbitData> out;
  for (long l = 0; l < m; ++l) {
    if (seen[l]) continue;
    OrbitData orb;
    orb.rep = l;
    long x = l;
    do {
      orb.elements.push_back(x);
      seen[x] = 1;
      x = (long)((__int128)x * r % m);
    } while (x != l);
    std::sort(orb.elements.begin(), orb.elements.end());
    orb.size = (long)orb.elements.size();
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<long> thetas(const MetacyclicParams& p, const OrbitData& orbit) {
  groups::require_valid(p);
  long mt = p.m * p.t;
  long c = p.t / orbit.size;  // t(zeta) | t
  // solve j*c = k*l*t (mod mt); c | mt and c | k*l*t, so the solutions are
  // j = (k*l*t)/c + (mt/c)*s, s in [0, c)
  __int128 b = (__int128)p.k * orbit.rep % mt * p.t % mt;
  if (b % c != 0)
    throw InternalError("thetas: congruence unexpectedly unsolvable");
  long j0 = (long)((b / c) % (mt / c));
  std::vector<long> out;
  for (long s = 0; s < c; ++s) out.push_back(j0 + (mt / c) * s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Irrep> irreps(const MetacyclicParams& p) {
  groups::require_valid(p);
  std::vector<Irrep> out;
  long dim2 = 0;
  for (const auto& orb : orbits(p.m, p.r)) {
    for (long j : thetas(p, orb)) {
      Irrep ir;
      ir.orbit = orb;
      ir.theta_exp = j;
      ir.dim = orb.size;
      dim2 += ir.dim * ir.dim;
      out.push_back(std::move(ir));
    }
  }
  if (dim2 != p.m * p.t)
    throw InternalError("irreps: sum of squared dimensions misses |G|");
  return out;
}

CycMatrix mat_identity(long dim, long order) {
  CycMatrix I(dim, std::vector<Cyclotomic>(dim, Cyclotomic::zero(order)));
  for (long i = 0; i < dim; ++i) I[i][i] = Cyclotomic::one(order);
  return I;
}

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b) {
  long n = (long)a.size();
  long order = a[0][0].order();
  CycMatrix c(n, std::vector<Cyclotomic>(n, Cyclotomic::zero(order)));
  for (long i = 0; i < n; ++i)
    for (long k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (long j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        c[i][j] = c[i][j] + a[i][k] * b[k][j];
      }
    }
  return c;
}

CycMatrix mat_pow(const CycMatrix& a, long e, long order) {
  CycMatrix result = mat_identity((long)a.size(), order);
  CycMatrix base = a;
  while (e > 0) {
    if (e & 1) result = mat_mul(result, base);
    e >>= 1;
    if (e) base = mat_mul(base, base);
  }
  return result;
}

bool mat_eq(const CycMatrix& a, const CycMatrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

Cyclotomic mat_trace(const CycMatrix& a, long order) {
  Cyclotomic t = Cyclotomic::zero(order);
  for (size_t i = 0; i < a.size(); ++i) t = t + a[i][i];
  return t;
}

RepMatrices rep_matrices(const MetacyclicParams& p, const Irrep& irrep) {
  long mt = p.m * p.t;
  long d = irrep.dim;
  RepMatrices M;
  M.Tsigma = CycMatrix(d, std::vector<Cyclotomic>(d, Cyclotomic::zero(mt)));
  M.Ttau = CycMatrix(d, std::vector<Cyclotomic>(d, Cyclotomic::zero(mt)));
  long e = irrep.orbit.rep;
  for (long i = 0; i < d; ++i) {
    // zeta_m^{l r^i} = zeta_{mt}^{t l r^i}
    M.Tsigma[i][i] = Cyclotomic::root_of_unity(mt, (long)((__int128)p.t * e % mt));
    e = (long)((__int128)e * p.r % p.m);
  }
  for (long i = 0; i + 1 < d; ++i)
    M.Ttau[i + 1][i] = Cyclotomic::one(mt);
  M.Ttau[0][d - 1] = Cyclotomic::root_of_unity(mt, irrep.theta_exp);
  return M;
}

bool verify_rep(const MetacyclicParams& p, const RepMatrices& M) {
  long d = (long)M.Tsigma.size();
  if (d == 0 || M.Ttau.size() != (size_t)d) return false;
  long order = M.Tsigma[0][0].order();
  CycMatrix I = mat_identity(d, order);
  if (!mat_eq(mat_pow(M.Tsigma, p.m, order), I)) return false;
  if (!mat_eq(mat_pow(M.Ttau, p.t, order), mat_pow(M.Tsigma, p.k, order)))
    return false;
  CycMatrix lhs = mat_mul(M.Tsigma, M.Ttau);
  CycMatrix rhs = mat_mul(M.Ttau, mat_pow(M.Tsigma, p.r, order));
  return mat_eq(lhs, rhs);
}

Rational char_inner(const MetacyclicParams& p, const Irrep& i1, const Irrep& i2,
                    long bound) {
  groups::require_valid(p);
  long mt = p.m * p.t;
  if (mt > bound)
    throw BoundExceeded("char_inner bound " + std::to_string(bound) +
                        " exceeded by order " + std::to_string(mt));
  // trace(T(sigma^a tau^b)) vanishes unless dim | b; at b = q*dim the tau
  // part is theta^q I and the trace is theta^q sum_i zeta_m^{a l r^i}.
  // Summing zeta_m^{a(l_1 r^i - l_2 r^j)} over a picks out m per matching
  // diagonal pair, so the inner product needs only the theta phases.
  long matches = 0;
  long ex1 = i1.orbit.rep;
  for (long i = 0; i < i1.dim; ++i) {
    long ex2 = i2.orbit.rep;
    for (long j = 0; j < i2.dim; ++j) {
      if ((ex1 - ex2) % p.m == 0) ++matches;
      ex2 = (long)((__int128)ex2 * p.r % p.m);
    }
    ex1 = (long)((__int128)ex1 * p.r % p.m);
  }
  Cyclotomic total = Cyclotomic::zero(mt);
  if (matches) {
    for (long b = 0; b < p.t; ++b) {
      if (b % i1.dim != 0 || b % i2.dim != 0) continue;
      long q1 = b / i1.dim, q2 = b / i2.dim;
      long ed = (long)((((__int128)q1 * i1.theta_exp -
                         (__int128)q2 * i2.theta_exp) % mt + mt) % mt);
      total = total + Rational(p.m * matches) * Cyclotomic::root_of_unity(mt, ed);
    }
  }
  if (!total.is_rational())
    throw InternalError("char_inner: inner product is not rational");
  return total.rational_value() / Rational(mt);
}

CharTable character_table(const MetacyclicParams& p, long bound) {
  CharTable tab;
  tab.classes = groups::conjugacy_classes(p, bound);
  tab.rows = irreps(p);
  long mt = p.m * p.t;
  for (const auto& ir : tab.rows) {
    auto M = rep_matrices(p, ir);
    std::vector<Cyclotomic> row;
    for (const auto& cls : tab.classes) {
      const Element& g = cls.front();
      CycMatrix Tg = mat_mul(mat_pow(M.Tsigma, g.a, mt), mat_pow(M.Ttau, g.b, mt));
      row.push_back(mat_trace(Tg, mt));
    }
    tab.values.push_back(std::move(row));
  }
  return tab;
}

}  // namespace covers::reps
