#include "covers/groups.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace covers::groups {

using exact::gcd_ll;
using exact::invmod_ll;
using exact::powmod_ll;

MetacyclicReport validate_metacyclic(const MetacyclicParams& p) {
  MetacyclicReport rep;
  rep.ranges_ok = p.m >= 1 && p.t >= 1 && p.k >= 1 && p.k <= p.m &&
                  p.r >= 1 && p.r <= p.m;
  if (!rep.ranges_ok)
    rep.failures.push_back("parameters out of range: need m,t >= 1 and k,r in [1,m]");
  if (rep.ranges_ok) {
    rep.cond_r_pow_t = powmod_ll(p.r, p.t, p.m) == 1 % p.m;
    rep.cond_k_r = (__int128)p.k * p.r % p.m == p.k % p.m;
    rep.cond_gcd_r_m = gcd_ll(p.r, p.m) == 1;
    if (!rep.cond_r_pow_t) rep.failures.push_back("r^t ≢ 1 (mod m)");
    if (!rep.cond_k_r) rep.failures.push_back("kr ≢ k (mod m)");
    if (!rep.cond_gcd_r_m) rep.failures.push_back("gcd(r, m) ≠ 1");
  }
  rep.valid = rep.ranges_ok && rep.cond_r_pow_t && rep.cond_k_r && rep.cond_gcd_r_m;
  if (rep.valid) {
    rep.split = p.k == p.m;
    rep.abelian = (p.r - 1) % p.m == 0;
    rep.cyclic_flag = gcd_ll(p.k, p.m) == 1;
    // weaker computable stand-in for "t is minimal with tau^t in <sigma>":
    // no proper divisor t' of t admits k' with r^{t'} = 1, k = k'(t/t'),
    // k'(r-1) = 0 (mod m)
    rep.t_minimal_heuristic = true;
    for (long tp = 1; tp < p.t && rep.t_minimal_heuristic; ++tp) {
      if (p.t % tp != 0) continue;
      if (powmod_ll(p.r, tp, p.m) != 1 % p.m) continue;
      long q = p.t / tp;
      for (long kp = 1; kp <= p.m; ++kp) {
        if ((__int128)kp * q % p.m != p.k % p.m) continue;
        if ((__int128)kp * (p.r - 1) % p.m != 0) continue;
        rep.t_minimal_heuristic = false;
        break;
      }
    }
  }
  return rep;
}

void require_valid(const MetacyclicParams& p) {
  auto rep = validate_metacyclic(p);
  if (!rep.valid) {
    std::string msg = "invalid metacyclic parameters:";
    for (const auto& f : rep.failures) msg += " " + f + ";";
    throw InvalidParams(msg);
  }
}

Element mc_identity() { return Element{0, 0}; }

// Collection under sigma tau = tau sigma^r: moving sigma^{a2} left through
// tau^{b1} twists by r^{-b1}; a tau-overflow deposits sigma^k, which is
// central by kr = k (mod m).
Element mc_mul(const MetacyclicParams& p, const Element& g, const Element& h) {
  long rinv = invmod_ll(p.r, p.m);
  long twist = powmod_ll(rinv, g.b, p.m);
  long q = (g.b + h.b) / p.t;
  long a = (long)(((__int128)g.a + (__int128)h.a * twist +
                   (__int128)p.k % p.m * q) % p.m);
  long b = (g.b + h.b) % p.t;
  return Element{a, b};
}

Element mc_inv(const MetacyclicParams& p, const Element& g) {
  long b = (p.t - g.b) % p.t;
  long carry = g.b > 0 ? 1 : 0;  // tau^{b} tau^{t-b} = tau^t = sigma^k
  __int128 want = ((__int128)g.a + (__int128)(p.k % p.m) * carry) % p.m;
  long tw = powmod_ll(p.r, g.b, p.m);  // inverse of the rinv^b twist
  long a = (long)(((-want * tw) % p.m + p.m) % p.m);
  return Element{a, b};
}

long mc_order(const MetacyclicParams& p, const Element& g) {
  Element x = g;
  long n = 1;
  while (!(x == mc_identity())) {
    x = mc_mul(p, x, g);
    ++n;
  }
  return n;
}

std::vector<Element> mc_elements(const MetacyclicParams& p) {
  std::vector<Element> all;
  all.reserve((size_t)p.m * p.t);
  for (long a = 0; a < p.m; ++a)
    for (long b = 0; b < p.t; ++b) all.push_back(Element{a, b});
  return all;
}

namespace {

// Flat-index multiplication table helpers; index = a*t + b.
struct McTable {
  long m, t, n;
  std::vector<long> pow_rinv;  // rinv^b mod m for b < t
  long k;

  explicit McTable(const MetacyclicParams& p) : m(p.m), t(p.t), n(p.m * p.t), k(p.k) {
    long rinv = invmod_ll(p.r, p.m);
    pow_rinv.resize(t);
    long cur = 1 % m;
    for (long b = 0; b < t; ++b) {
      pow_rinv[b] = cur;
      cur = (long)((__int128)cur * rinv % m);
    }
  }
  long mul(long x, long y) const {
    long a1 = x / t, b1 = x % t, a2 = y / t, b2 = y % t;
    long q = (b1 + b2) / t;
    long a = (long)(((__int128)a1 + (__int128)a2 * pow_rinv[b1] +
                     (__int128)(k % m) * q) % m);
    return a * t + (b1 + b2) % t;
  }
};

}  // namespace

std::vector<std::vector<Element>> conjugacy_classes(const MetacyclicParams& p,
                                                    long bound) {
  require_valid(p);
  long n = p.m * p.t;
  if (n > bound)
    throw BoundExceeded("group order " + std::to_string(n) +
                        " exceeds conjugacy bound " + std::to_string(bound));
  McTable tab(p);
  std::vector<long> invs(n);
  for (long a = 0; a < p.m; ++a)
    for (long b = 0; b < p.t; ++b) {
      Element e = mc_inv(p, Element{a, b});
      invs[a * p.t + b] = e.a * p.t + e.b;
    }
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Element>> classes;
  for (long x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<long> cls;
    for (long g = 0; g < n; ++g)
      cls.insert(tab.mul(invs[g], tab.mul(x, g)));
    std::vector<Element> members;
    for (long y : cls) {
      seen[y] = 1;
      members.push_back(Element{y / p.t, y % p.t});
    }
    classes.push_back(std::move(members));
  }
  return classes;
}

bool iso_check(const MetacyclicParams& p1, const MetacyclicParams& p2,
               long bound) {
  require_valid(p1);
  require_valid(p2);
  long n1 = p1.m * p1.t, n2 = p2.m * p2.t;
  if (n1 != n2)
    throw OrderMismatch("groups have different orders " + std::to_string(n1) +
                        " and " + std::to_string(n2));
  if (n1 > bound)
    throw BoundExceeded("iso_check bound " + std::to_string(bound) +
                        " exceeded by order " + std::to_string(n1));

  auto histogram = [](const MetacyclicParams& p) {
    std::map<long, long> h;
    for (const auto& g : mc_elements(p)) ++h[mc_order(p, g)];
    return h;
  };
  if (histogram(p1) != histogram(p2)) return false;

  McTable tab(p2);
  long n = n1;
  auto tpow = [&](long x, long e) {
    long r = 0;  // identity index (a=0,b=0)
    long base = x;
    while (e > 0) {
      if (e & 1) r = tab.mul(r, base);
      e >>= 1;
      if (e) base = tab.mul(base, base);
    }
    return r;
  };
  // images S of sigma and T of tau satisfying the relations of p1; von Dyck
  // gives a homomorphism, surjectivity makes it an isomorphism
  for (long S = 0; S < n; ++S) {
    if (tpow(S, p1.m) != 0) continue;
    for (long T = 0; T < n; ++T) {
      if (tpow(S, p1.k) != tpow(T, p1.t)) continue;
      if (tab.mul(S, T) != tab.mul(T, tpow(S, p1.r))) continue;
      std::set<long> image;
      long Sa = 0;
      for (long a = 0; a < p1.m; ++a) {
        long x = Sa;
        for (long b = 0; b < p1.t; ++b) {
          image.insert(x);
          x = tab.mul(x, T);
        }
        Sa = tab.mul(Sa, S);
      }
      if ((long)image.size() == n) return true;
    }
  }
  return false;
}

// ---- metabelian ----

namespace {

using Matrix = std::vector<std::vector<long>>;

long s_of(const MetabelianPresentation& p) { return (long)p.sigma_orders.size(); }
long l_of(const MetabelianPresentation& p) { return (long)p.tau_orders.size(); }

// entries of row u live mod m_u
Matrix mat_mul_mod(const Matrix& A, const Matrix& B,
                   const std::vector<long>& orders) {
  long s = (long)orders.size();
  Matrix C(s, std::vector<long>(s, 0));
  for (long u = 0; u < s; ++u)
    for (long i = 0; i < s; ++i) {
      __int128 acc = 0;
      for (long w = 0; w < s; ++w) acc += (__int128)A[u][w] * B[w][i];
      C[u][i] = (long)(((acc % orders[u]) + orders[u]) % orders[u]);
    }
  return C;
}

Matrix mat_identity(const std::vector<long>& orders) {
  long s = (long)orders.size();
  Matrix I(s, std::vector<long>(s, 0));
  for (long u = 0; u < s; ++u) I[u][u] = 1 % orders[u];
  return I;
}

std::vector<long> mat_apply(const Matrix& A, const std::vector<long>& x,
                            const std::vector<long>& orders) {
  long s = (long)orders.size();
  std::vector<long> y(s, 0);
  for (long u = 0; u < s; ++u) {
    __int128 acc = 0;
    for (long w = 0; w < s; ++w) acc += (__int128)A[u][w] * x[w];
    y[u] = (long)(((acc % orders[u]) + orders[u]) % orders[u]);
  }
  return y;
}

bool mat_eq_mod(const Matrix& A, const Matrix& B,
                const std::vector<long>& orders) {
  long s = (long)orders.size();
  for (long u = 0; u < s; ++u)
    for (long i = 0; i < s; ++i)
      if (((A[u][i] - B[u][i]) % orders[u] + orders[u]) % orders[u] != 0)
        return false;
  return true;
}

long a_index_size(const std::vector<long>& orders) {
  long n = 1;
  for (long m : orders) n *= m;
  return n;
}

std::vector<long> decode_radix(long idx, const std::vector<long>& orders) {
  std::vector<long> v(orders.size());
  for (size_t i = orders.size(); i-- > 0;) {
    v[i] = idx % orders[i];
    idx /= orders[i];
  }
  return v;
}

long encode_radix(const std::vector<long>& v, const std::vector<long>& orders) {
  long idx = 0;
  for (size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + v[i];
  return idx;
}

// Cached per-presentation data for mb_mul: inverse-power matrices.
struct MbOps {
  const MetabelianPresentation& p;
  // Mpow[j][e] = M_j^e, e in [0, a_j)
  std::vector<std::vector<Matrix>> Mpow;

  explicit MbOps(const MetabelianPresentation& pres) : p(pres) {
    long l = l_of(p);
    Mpow.resize(l);
    for (long j = 0; j < l; ++j) {
      Matrix cur = mat_identity(p.sigma_orders);
      Mpow[j].push_back(cur);
      for (long e = 1; e < p.tau_orders[j]; ++e) {
        cur = mat_mul_mod(cur, p.action[j], p.sigma_orders);
        Mpow[j].push_back(cur);
      }
    }
  }

  MetaElement mul(const MetaElement& g, const MetaElement& h) const {
    long s = s_of(p), l = l_of(p);
    // twist h's sigma-block through g's tau-block: apply prod_j M_j^{-b_j},
    // with M_j^{-b} = M_j^{a_j - b} since M_j^{a_j} = id
    std::vector<long> x = h.avec;
    for (long j = 0; j < l; ++j) {
      long e = (p.tau_orders[j] - g.bvec[j]) % p.tau_orders[j];
      if (e) x = mat_apply(Mpow[j][e], x, p.sigma_orders);
    }
    MetaElement out;
    out.avec.resize(s);
    for (long u = 0; u < s; ++u)
      out.avec[u] = (g.avec[u] + x[u]) % p.sigma_orders[u];
    out.bvec.resize(l);
    for (long j = 0; j < l; ++j) {
      long sum = g.bvec[j] + h.bvec[j];
      out.bvec[j] = sum % p.tau_orders[j];
      if (sum >= p.tau_orders[j])  // tau_j^{a_j} deposits its K-vector
        for (long u = 0; u < s; ++u)
          out.avec[u] = (out.avec[u] + p.kvec[j][u]) % p.sigma_orders[u];
    }
    return out;
  }
};

}  // namespace

MetabelianReport validate_metabelian(const MetabelianPresentation& pres) {
  MetabelianReport rep;
  long s = s_of(pres), l = l_of(pres);
  rep.shapes_ok = s >= 1 && (long)pres.action.size() == l &&
                  (long)pres.kvec.size() == l;
  for (long i = 0; i < s && rep.shapes_ok; ++i)
    if (pres.sigma_orders[i] < 1) rep.shapes_ok = false;
  for (long j = 0; j < l && rep.shapes_ok; ++j) {
    if (pres.tau_orders[j] < 1) rep.shapes_ok = false;
    if ((long)pres.kvec[j].size() != s) rep.shapes_ok = false;
    if ((long)pres.action[j].size() != s) rep.shapes_ok = false;
    for (long u = 0; u < s && rep.shapes_ok; ++u)
      if ((long)pres.action[j][u].size() != s) rep.shapes_ok = false;
  }
  if (!rep.shapes_ok) {
    rep.failures.push_back("presentation shapes inconsistent");
    return rep;
  }

  const auto& mo = pres.sigma_orders;

  rep.well_defined = true;
  for (long j = 0; j < l; ++j)
    for (long u = 0; u < s; ++u)
      for (long i = 0; i < s; ++i)
        if (((__int128)pres.action[j][u][i] * mo[i]) % mo[u] != 0)
          rep.well_defined = false;
  if (!rep.well_defined)
    rep.failures.push_back("action matrix not well defined on A: m_u ∤ M_{ui} m_i");

  long asize = a_index_size(mo);
  rep.automorphisms = rep.well_defined;
  if (rep.well_defined) {
    if (asize > (1 << 20)) {
      rep.automorphisms = false;
      rep.failures.push_back("|A| too large to certify automorphisms");
    } else {
      for (long j = 0; j < l && rep.automorphisms; ++j) {
        std::vector<char> hit(asize, 0);
        long count = 0;
        for (long idx = 0; idx < asize; ++idx) {
          auto y = mat_apply(pres.action[j], decode_radix(idx, mo), mo);
          long yi = encode_radix(y, mo);
          if (!hit[yi]) {
            hit[yi] = 1;
            ++count;
          }
        }
        if (count != asize) {
          rep.automorphisms = false;
          rep.failures.push_back("action matrix " + std::to_string(j + 1) +
                                 " is not a unit: not bijective on A");
        }
      }
    }
  }

  if (rep.automorphisms) {
    rep.powers_identity = true;
    Matrix id = mat_identity(mo);
    std::vector<Matrix> full_pow(l);
    for (long j = 0; j < l; ++j) {
      Matrix cur = id;
      for (long e = 0; e < pres.tau_orders[j]; ++e)
        cur = mat_mul_mod(cur, pres.action[j], mo);
      full_pow[j] = cur;
      if (!mat_eq_mod(cur, id, mo)) {
        rep.powers_identity = false;
        rep.failures.push_back("M_" + std::to_string(j + 1) +
                               "^{a_j} ≠ id as automorphism of A");
      }
    }
    rep.commuting = true;
    for (long i = 0; i < l; ++i)
      for (long j = i + 1; j < l; ++j)
        if (!mat_eq_mod(mat_mul_mod(pres.action[i], pres.action[j], mo),
                        mat_mul_mod(pres.action[j], pres.action[i], mo), mo)) {
          rep.commuting = false;
          rep.failures.push_back("action matrices " + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + " do not commute");
        }
    rep.kvec_fixed = true;
    for (long j = 0; j < l; ++j)
      for (long jp = 0; jp < l; ++jp) {
        auto img = mat_apply(pres.action[j], pres.kvec[jp], mo);
        for (long u = 0; u < s; ++u)
          if (((img[u] - pres.kvec[jp][u]) % mo[u] + mo[u]) % mo[u] != 0) {
            rep.kvec_fixed = false;
            rep.failures.push_back(
                "K-vector " + std::to_string(jp + 1) +
                " not fixed by action matrix " + std::to_string(j + 1) +
                " (tau-commutativity fails)");
            u = s;
            jp = l;
            j = l;
          }
      }
  }

  bool structure_ok = rep.well_defined && rep.automorphisms &&
                      rep.powers_identity && rep.commuting && rep.kvec_fixed;
  if (structure_ok) {
    MbOps ops(pres);
    long n = mb_group_order(pres);
    std::vector<long> all_orders = mo;
    for (long a : pres.tau_orders) all_orders.push_back(a);
    auto decode = [&](long idx) {
      auto v = decode_radix(idx, all_orders);
      MetaElement e;
      e.avec.assign(v.begin(), v.begin() + s);
      e.bvec.assign(v.begin() + s, v.end());
      return e;
    };
    auto encode = [&](const MetaElement& e) {
      std::vector<long> v = e.avec;
      v.insert(v.end(), e.bvec.begin(), e.bvec.end());
      return encode_radix(v, all_orders);
    };
    rep.associative = true;
    if (n <= 512) {
      std::vector<long> table((size_t)n * n);
      for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
          table[(size_t)x * n + y] = encode(ops.mul(decode(x), decode(y)));
      for (long x = 0; x < n && rep.associative; ++x)
        for (long y = 0; y < n && rep.associative; ++y)
          for (long z = 0; z < n; ++z)
            if (table[(size_t)table[(size_t)x * n + y] * n + z] !=
                table[(size_t)x * n + table[(size_t)y * n + z]]) {
              rep.associative = false;
              rep.failures.push_back("associativity fails at (" +
                                     std::to_string(x) + "," + std::to_string(y) +
                                     "," + std::to_string(z) + ")");
              break;
            }
    } else {
      std::mt19937_64 rng(0x5eed);
      for (long trial = 0; trial < 100000 && rep.associative; ++trial) {
        MetaElement x = decode((long)(rng() % n)), y = decode((long)(rng() % n)),
                    z = decode((long)(rng() % n));
        if (!(ops.mul(ops.mul(x, y), z) == ops.mul(x, ops.mul(y, z)))) {
          rep.associative = false;
          rep.failures.push_back("associativity fails on sampled triple");
        }
      }
    }
  }

  rep.valid = structure_ok && rep.associative;
  return rep;
}

void require_valid(const MetabelianPresentation& pres) {
  auto rep = validate_metabelian(pres);
  if (!rep.valid) {
    std::string msg = "inconsistent metabelian presentation:";
    for (const auto& f : rep.failures) msg += " " + f + ";";
    throw InconsistentPresentation(msg);
  }
}

MetaElement mb_identity(const MetabelianPresentation& pres) {
  MetaElement e;
  e.avec.assign(pres.sigma_orders.size(), 0);
  e.bvec.assign(pres.tau_orders.size(), 0);
  return e;
}

MetaElement mb_mul(const MetabelianPresentation& pres, const MetaElement& g,
                   const MetaElement& h) {
  MbOps ops(pres);
  return ops.mul(g, h);
}

long mb_order(const MetabelianPresentation& pres, const MetaElement& g) {
  MbOps ops(pres);
  MetaElement x = g;
  MetaElement id = mb_identity(pres);
  long n = 1;
  while (!(x == id)) {
    x = ops.mul(x, g);
    ++n;
  }
  return n;
}

long mb_group_order(const MetabelianPresentation& pres) {
  long n = 1;
  for (long m : pres.sigma_orders) n *= m;
  for (long a : pres.tau_orders) n *= a;
  return n;
}

MetabelianPresentation as_metabelian(const MetacyclicParams& p) {
  MetabelianPresentation pres;
  pres.sigma_orders = {p.m};
  pres.tau_orders = {p.t};
  pres.action = {{{p.r % p.m}}};
  pres.kvec = {{p.k % p.m}};
  return pres;
}

}  // namespace covers::groups
