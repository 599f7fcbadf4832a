#include "covers/tower.hpp"

#include <algorithm>
#include <sstream>

namespace covers::funfield {

using exact::gcd_ll;
using exact::lcm_ll;

TowerElement::TowerElement(long m, long t, long order) {
  c_.assign(m, std::vector<RatFunc>((size_t)t, RatFunc::zero(order)));
}

bool TowerElement::is_zero() const {
  for (const auto& row : c_)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

bool TowerElement::in_z_level() const {
  for (size_t i = 1; i < c_.size(); ++i)
    for (const auto& x : c_[i])
      if (!x.is_zero()) return false;
  return true;
}

bool TowerElement::in_base_field() const {
  if (!in_z_level()) return false;
  for (size_t j = 1; j < c_[0].size(); ++j)
    if (!c_[0][j].is_zero()) return false;
  return true;
}

RatFunc TowerElement::base_value() const {
  if (!in_base_field())
    throw NotInZLevel("element does not lie in the base field");
  return c_[0][0];
}

std::string TowerElement::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = 0; i < vdim(); ++i)
    for (long j = 0; j < wdim(); ++j) {
      const RatFunc& x = c_[i][j];
      if (x.is_zero()) continue;
      if (!first) out << " + ";
      first = false;
      std::string cs = x.str();
      bool simple = cs.find_first_of(" +-") == std::string::npos ||
                    (cs.size() > 1 && cs[0] == '-' &&
                     cs.find_first_of(" +-", 1) == std::string::npos);
      if (i == 0 && j == 0) {
        out << cs;
        continue;
      }
      if (!x.is_one()) {
        out << (simple ? cs : "(" + cs + ")") << "*";
      }
      if (i > 0) {
        out << "v";
        if (i > 1) out << "^" << i;
        if (j > 0) out << "*";
      }
      if (j > 0) {
        out << "w";
        if (j > 1) out << "^" << j;
      }
    }
  return out.str();
}

TowerAlgebra::TowerAlgebra(TowerSpec spec) : spec_(std::move(spec)) {
  if (spec_.m < 1 || spec_.t < 1)
    throw InvalidParams("tower degrees must be positive");
  if (spec_.N % lcm_ll(spec_.m, spec_.t) != 0)
    throw InvalidParams("cyclotomic order N must be divisible by lcm(m, t)");
  if (spec_.f.is_zero()) throw ZeroModulus("tower modulus f is zero");
  if ((long)spec_.g.size() != spec_.t)
    throw InvalidParams("g must have t w-coefficients");
  bool gz = true;
  for (const auto& x : spec_.g) {
    if (x.order() != spec_.N)
      throw OrderMismatch("g coefficient has wrong cyclotomic order");
    if (!x.is_zero()) gz = false;
  }
  if (gz) throw ZeroModulus("tower modulus g is zero");
  if (spec_.f.order() != spec_.N)
    throw OrderMismatch("f has wrong cyclotomic order");
  groups::require_valid(
      groups::MetacyclicParams{spec_.m, spec_.k, spec_.t, spec_.r});
}

TowerElement TowerAlgebra::zero() const {
  return TowerElement(spec_.m, spec_.t, spec_.N);
}

TowerElement TowerAlgebra::one() const {
  TowerElement e = zero();
  e.at(0, 0) = RatFunc::one(spec_.N);
  return e;
}

TowerElement TowerAlgebra::from_base(const RatFunc& f) const {
  TowerElement e = zero();
  e.at(0, 0) = f.order() == spec_.N ? f : f.lifted(spec_.N);
  return e;
}

TowerElement TowerAlgebra::from_z(const ZElem& z) const {
  if ((long)z.size() > spec_.t)
    throw InvalidParams("Z-level element has too many w-coefficients");
  TowerElement e = zero();
  for (size_t j = 0; j < z.size(); ++j)
    e.at(0, (long)j) = z[j].order() == spec_.N ? z[j] : z[j].lifted(spec_.N);
  return e;
}

TowerElement TowerAlgebra::v() const {
  if (spec_.m == 1) return from_z(spec_.g);  // v = g when v^1 = g
  TowerElement e = zero();
  e.at(1, 0) = RatFunc::one(spec_.N);
  return e;
}

TowerElement TowerAlgebra::w() const {
  if (spec_.t == 1) return from_base(spec_.f);
  TowerElement e = zero();
  e.at(0, 1) = RatFunc::one(spec_.N);
  return e;
}

TowerElement TowerAlgebra::add(const TowerElement& a, const TowerElement& b) const {
  TowerElement c = a;
  for (long i = 0; i < spec_.m; ++i)
    for (long j = 0; j < spec_.t; ++j) c.at(i, j) = c.at(i, j) + b.at(i, j);
  return c;
}

TowerElement TowerAlgebra::sub(const TowerElement& a, const TowerElement& b) const {
  TowerElement c = a;
  for (long i = 0; i < spec_.m; ++i)
    for (long j = 0; j < spec_.t; ++j) c.at(i, j) = c.at(i, j) - b.at(i, j);
  return c;
}

// multiplication in C(Y)[w]/(w^t - f)
ZElem TowerAlgebra::zmul(const ZElem& a, const ZElem& b) const {
  long t = spec_.t;
  ZElem conv(2 * t - 1, RatFunc::zero(spec_.N));
  for (long i = 0; i < t; ++i) {
    if (a[i].is_zero()) continue;
    for (long j = 0; j < t; ++j) {
      if (b[j].is_zero()) continue;
      conv[i + j] = conv[i + j] + a[i] * b[j];
    }
  }
  ZElem out(conv.begin(), conv.begin() + t);
  for (long j = t; j < 2 * t - 1; ++j)
    if (!conv[j].is_zero())
      out[j - t] = out[j - t] + conv[j] * spec_.f;
  return out;
}

TowerElement TowerAlgebra::mul(const TowerElement& a, const TowerElement& b) const {
  long m = spec_.m, t = spec_.t;
  // convolve in v with Z-level coefficients, then fold v^{m+e} = g v^e
  std::vector<ZElem> conv(2 * m - 1, ZElem(t, RatFunc::zero(spec_.N)));
  for (long i = 0; i < m; ++i) {
    ZElem ai(t, RatFunc::zero(spec_.N));
    bool az = true;
    for (long j = 0; j < t; ++j) {
      ai[j] = a.at(i, j);
      if (!ai[j].is_zero()) az = false;
    }
    if (az) continue;
    for (long i2 = 0; i2 < m; ++i2) {
      ZElem bi(t, RatFunc::zero(spec_.N));
      bool bz = true;
      for (long j = 0; j < t; ++j) {
        bi[j] = b.at(i2, j);
        if (!bi[j].is_zero()) bz = false;
      }
      if (bz) continue;
      ZElem prod = zmul(ai, bi);
      for (long j = 0; j < t; ++j)
        conv[i + i2][j] = conv[i + i2][j] + prod[j];
    }
  }
  for (long e = 2 * m - 2; e >= m; --e) {
    bool z = std::all_of(conv[e].begin(), conv[e].end(),
                         [](const RatFunc& x) { return x.is_zero(); });
    if (z) continue;
    ZElem folded = zmul(conv[e], spec_.g);
    for (long j = 0; j < t; ++j)
      conv[e - m][j] = conv[e - m][j] + folded[j];
  }
  TowerElement out = zero();
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < t; ++j) out.at(i, j) = conv[i][j];
  return out;
}

TowerElement TowerAlgebra::scale(const RatFunc& c, const TowerElement& a) const {
  RatFunc cl = c.order() == spec_.N ? c : c.lifted(spec_.N);
  TowerElement out = a;
  for (long i = 0; i < spec_.m; ++i)
    for (long j = 0; j < spec_.t; ++j) out.at(i, j) = cl * out.at(i, j);
  return out;
}

TowerElement TowerAlgebra::pow(const TowerElement& a, long e) const {
  if (e < 0) return pow(inverse(a), -e);
  TowerElement result = one();
  TowerElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

TowerElement TowerAlgebra::inverse(const TowerElement& a) const {
  if (a.is_zero()) throw DivisionByZero("inverse of zero tower element");
  long n = dim();
  long m = spec_.m, t = spec_.t;
  // columns: a * basis(v^i w^j) in coordinates; solve M x = e_0
  std::vector<std::vector<RatFunc>> M(n, std::vector<RatFunc>(n, RatFunc::zero(spec_.N)));
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < t; ++j) {
      TowerElement basis = zero();
      basis.at(i, j) = RatFunc::one(spec_.N);
      TowerElement col = mul(a, basis);
      for (long i2 = 0; i2 < m; ++i2)
        for (long j2 = 0; j2 < t; ++j2)
          M[i2 * t + j2][i * t + j] = col.at(i2, j2);
    }
  // Gaussian elimination with augmented rhs = e_0; on singularity, extract
  // a kernel vector as the zero-divisor witness
  std::vector<RatFunc> rhs(n, RatFunc::zero(spec_.N));
  rhs[0] = RatFunc::one(spec_.N);
  std::vector<long> pivot_col(n, -1);
  long row = 0;
  for (long col = 0; col < n && row < n; ++col) {
    long p = -1;
    for (long i = row; i < n; ++i)
      if (!M[i][col].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(M[row], M[p]);
    std::swap(rhs[row], rhs[p]);
    RatFunc inv = M[row][col].inverse();
    for (long j2 = 0; j2 < n; ++j2) M[row][j2] = inv * M[row][j2];
    rhs[row] = inv * rhs[row];
    for (long i = 0; i < n; ++i) {
      if (i == row || M[i][col].is_zero()) continue;
      RatFunc c = M[i][col];
      for (long j2 = 0; j2 < n; ++j2)
        M[i][j2] = M[i][j2] - c * M[row][j2];
      rhs[i] = rhs[i] - c * rhs[row];
    }
    pivot_col[row] = col;
    ++row;
  }
  if (row < n) {
    // free column -> kernel vector -> witness a * z = 0 with z != 0
    std::vector<char> is_pivot(n, 0);
    for (long i = 0; i < row; ++i) is_pivot[pivot_col[i]] = 1;
    long free_col = 0;
    while (free_col < n && is_pivot[free_col]) ++free_col;
    std::vector<RatFunc> z(n, RatFunc::zero(spec_.N));
    z[free_col] = RatFunc::one(spec_.N);
    for (long i = 0; i < row; ++i)
      z[pivot_col[i]] = -M[i][free_col];
    TowerElement witness = zero();
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < t; ++j) witness.at(i, j) = z[i * t + j];
    throw NonInvertible("element is a zero divisor in the tower algebra",
                        witness.str());
  }
  // back-substitution is already done (full reduction); rhs is the solution
  TowerElement out = zero();
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < t; ++j) out.at(i, j) = rhs[i * t + j];
  return out;
}

Cyclotomic TowerAlgebra::zeta_m() const {
  return Cyclotomic::root_of_unity(spec_.N, spec_.N / spec_.m);
}

Cyclotomic TowerAlgebra::zeta_t() const {
  return Cyclotomic::root_of_unity(spec_.N, spec_.N / spec_.t);
}

TowerElement TowerAlgebra::apply(const TowerAuto& phi, const TowerElement& x) const {
  // precompute powers of the generator images
  std::vector<TowerElement> vp{one()}, wp{one()};
  for (long i = 1; i < spec_.m; ++i) vp.push_back(mul(vp.back(), phi.image_of_v));
  for (long j = 1; j < spec_.t; ++j) wp.push_back(mul(wp.back(), phi.image_of_w));
  TowerElement out = zero();
  for (long i = 0; i < spec_.m; ++i)
    for (long j = 0; j < spec_.t; ++j) {
      const RatFunc& c = x.at(i, j);
      if (c.is_zero()) continue;
      out = add(out, scale(c, mul(vp[i], wp[j])));
    }
  return out;
}

TowerAuto TowerAlgebra::compose(const TowerAuto& phi, const TowerAuto& psi) const {
  TowerAuto out;
  out.image_of_v = apply(phi, psi.image_of_v);
  out.image_of_w = apply(phi, psi.image_of_w);
  return out;
}

TowerAuto TowerAlgebra::define_sigma() const {
  TowerAuto s;
  s.image_of_v = scale(RatFunc::constant(zeta_m()), v());
  s.image_of_w = w();
  return s;
}

TowerAuto TowerAlgebra::define_tau_alpha(const ZElem& alpha) const {
  TowerAuto t;
  t.image_of_v = mul(from_z(alpha), pow(v(), spec_.r));
  t.image_of_w = scale(RatFunc::constant(zeta_t()), w());
  return t;
}

TowerAuto TowerAlgebra::define_tau_p(const ZElem& P) const {
  TowerAuto t;
  t.image_of_v = mul(from_z(P), inverse(v()));
  t.image_of_w = scale(RatFunc::constant(zeta_t()), w());
  return t;
}

ActionReport verify_group_action(const TowerAlgebra& T, const TowerAuto& sigma,
                                 const TowerAuto& tau,
                                 const groups::MetacyclicParams& p) {
  ActionReport rep;
  auto push = [&](std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  TowerElement gv = T.from_z(T.spec().g);
  TowerElement fv = T.from_base(T.spec().f);

  // moduli preservation: images must satisfy the defining relations
  auto hom_check = [&](const TowerAuto& phi, const std::string& nm) {
    TowerElement lhs_v = T.pow(phi.image_of_v, T.spec().m);
    TowerElement rhs_v = T.apply(phi, gv);
    push(nm + "(v)^m = " + nm + "(g)", lhs_v == rhs_v);
    TowerElement lhs_w = T.pow(phi.image_of_w, T.spec().t);
    TowerElement rhs_w = T.apply(phi, fv);
    push(nm + "(w)^t = " + nm + "(f)", lhs_w == rhs_w);
  };
  hom_check(sigma, "sigma");
  hom_check(tau, "tau");

  // sigma^m = id
  TowerElement x = T.v(), y = T.w();
  for (long i = 0; i < p.m; ++i) x = T.apply(sigma, x);
  for (long i = 0; i < p.m; ++i) y = T.apply(sigma, y);
  push("sigma^m = id", x == T.v() && y == T.w());

  // tau^t = sigma^k
  TowerElement tv = T.v(), tw = T.w();
  for (long i = 0; i < p.t; ++i) tv = T.apply(tau, tv);
  for (long i = 0; i < p.t; ++i) tw = T.apply(tau, tw);
  TowerElement sv = T.v(), sw = T.w();
  for (long i = 0; i < p.k; ++i) sv = T.apply(sigma, sv);
  for (long i = 0; i < p.k; ++i) sw = T.apply(sigma, sw);
  push("tau^t = sigma^k", tv == sv && tw == sw);

  // sigma tau = tau sigma^r with (phi o psi)(x) = phi(psi(x))
  TowerElement lhs_v = T.apply(sigma, T.apply(tau, T.v()));
  TowerElement lhs_w = T.apply(sigma, T.apply(tau, T.w()));
  TowerElement rv = T.v(), rw = T.w();
  for (long i = 0; i < p.r; ++i) rv = T.apply(sigma, rv);
  for (long i = 0; i < p.r; ++i) rw = T.apply(sigma, rw);
  TowerElement rhs_v2 = T.apply(tau, rv);
  TowerElement rhs_w2 = T.apply(tau, rw);
  push("sigma tau = tau sigma^r", lhs_v == rhs_v2 && lhs_w == rhs_w2);

  rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const ActionCheck& c) { return c.pass; });
  return rep;
}

TowerElement alpha_of(const TowerAlgebra& T, const TowerAuto& tau) {
  TowerElement vinv = T.inverse(T.v());
  TowerElement alpha = T.mul(tau.image_of_v, T.pow(vinv, T.spec().r));
  TowerElement salpha = T.apply(T.define_sigma(), alpha);
  if (!(salpha == alpha))
    throw NotInvariant("alpha = tau(v) v^{-r} is not sigma-invariant");
  if (!alpha.in_z_level())
    throw NotInvariant("alpha does not lie in the Z-level");
  return alpha;
}

bool norm_alpha_identity(const TowerAlgebra& T, const TowerAuto& tau,
                         const TowerElement& alpha) {
  long m = T.spec().m, t = T.spec().t, r = T.spec().r, k = T.spec().k;
  // c = (r^t - 1)/m
  long long rt = 1;
  for (long i = 0; i < t; ++i) rt *= r;
  long long c = (rt - 1) / m;
  // N_alpha = prod_{i=0}^{t-1} tau^i(alpha)^{r^{t-1-i}}
  TowerElement nalpha = T.one();
  TowerElement cur = alpha;
  for (long i = 0; i < t; ++i) {
    long long e = 1;
    for (long j = 0; j < t - 1 - i; ++j) e *= r;
    nalpha = T.mul(nalpha, T.pow(cur, (long)e));
    if (i + 1 < t) cur = T.apply(tau, cur);
  }
  TowerElement lhs = T.mul(nalpha, T.pow(T.from_z(T.spec().g), (long)c));
  TowerElement rhs = T.scale(RatFunc::constant(T.zeta_m().pow(k)), T.one());
  return lhs == rhs;
}

TowerElement norm_to_base(const TowerAlgebra& T, const TowerAuto& tau,
                          const TowerElement& h) {
  if (!h.in_z_level())
    throw NotInZLevel("norm_to_base requires a Z-level element");
  TowerElement F = T.one();
  TowerElement cur = h;
  for (long i = 0; i < T.spec().t; ++i) {
    F = T.mul(F, cur);
    if (i + 1 < T.spec().t) cur = T.apply(tau, cur);
  }
  if (!F.in_base_field())
    throw InternalError("norm_to_base: product did not land in C(Y)");
  return F;
}

PDescent p_power_descent(const TowerAlgebra& T, const TowerAuto& tau) {
  PDescent out;
  TowerElement P = T.one();
  TowerElement cur = T.v();
  for (long i = 0; i < T.spec().t; ++i) {
    P = T.mul(P, cur);
    if (i + 1 < T.spec().t) cur = T.apply(tau, cur);
  }
  out.P = P;
  long m = T.spec().m;
  long g = gcd_ll(T.spec().r - 1, m);  // gcd(0, m) = m for r = 1
  TowerElement acc = T.one();
  out.u = 0;
  for (long u = 1; u <= m; ++u) {
    acc = T.mul(acc, P);
    if (acc.in_base_field()) {
      out.u = u;
      break;
    }
  }
  if (out.u == 0)
    throw InternalError("p_power_descent: P^m is not in the base field");
  if (g % out.u != 0)
    throw InternalError("p_power_descent: u does not divide gcd(r-1, m)");
  if (!T.pow(P, m).in_base_field())
    throw InternalError("p_power_descent: P^m must lie in C(Y)");
  return out;
}

static std::vector<RatFunc> modulus_t2(long N, long m, const RatFunc& a,
                                       const RatFunc& Pm) {
  // x^{2m} - 2 a x^m + P^m as coefficient list
  std::vector<RatFunc> mod(2 * m + 1, RatFunc::zero(N));
  mod[0] = Pm.lifted(N);
  mod[m] = RatFunc::from_rational(N, exact::Rational(-2)) * a.lifted(N);
  mod[2 * m] = RatFunc::one(N);
  return mod;
}

static bool modulus_vanishes(const TowerAlgebra& T,
                             const std::vector<RatFunc>& modulus) {
  TowerElement acc = T.zero();
  TowerElement xp = T.one();
  for (size_t i = 0; i < modulus.size(); ++i) {
    if (!modulus[i].is_zero()) acc = T.add(acc, T.scale(modulus[i], xp));
    if (i + 1 < modulus.size()) xp = T.mul(xp, T.v());
  }
  return acc.is_zero();
}

TowerBuild t2_build(long m, long k, long r, const RatFunc& a, const ZElem& P,
                    const std::optional<RatFunc>& f_given) {
  groups::MetacyclicParams p{m, k, 2, r};
  groups::require_valid(p);
  if ((r + 1) % m != 0)
    throw InvalidParams("t2_build supports the family m | r+1 (tau(x) = P/x)");
  if (P.empty() || P.size() > 2)
    throw InvalidParams("P must be a Z-level element: at most two w-coefficients");

  long N = lcm_ll(lcm_ll(m, 2), a.order());
  for (const auto& c : P) N = lcm_ll(N, c.order());
  if (f_given) N = lcm_ll(N, f_given->order());

  RatFunc al = a.lifted(N);
  RatFunc p0 = P[0].lifted(N);
  RatFunc p1 = P.size() > 1 ? P[1].lifted(N) : RatFunc::zero(N);

  RatFunc f(N);
  if (p1.is_zero()) {
    // P in C(Y): f = a^2 - P^m directly
    f = al * al - p0.pow(m);
    if (f_given && !(f == f_given->lifted(N)))
      throw ConstraintViolated("supplied f contradicts f = a^2 - P^m");
  } else {
    if (!f_given)
      throw InvalidParams(
          "P has a w-component: f = a^2 - P^m is implicit, pass f explicitly");
    f = f_given->lifted(N);
  }
  if (f.is_zero()) throw ZeroModulus("t2 tower needs f = a^2 - P^m != 0");

  TowerSpec spec;
  spec.N = N;
  spec.m = m;
  spec.t = 2;
  spec.r = r;
  spec.k = k;
  spec.f = f;
  spec.g = {al, RatFunc::one(N)};  // g = a + w

  TowerBuild out{TowerAlgebra(std::move(spec)), {}, {}, {}, {}, false};
  const TowerAlgebra& T = out.algebra;
  out.sigma = T.define_sigma();
  out.tau = T.define_tau_p({p0, p1});
  out.report = verify_group_action(T, out.sigma, out.tau, p);

  // P^m in C(Y); verify and freeze the minimal equation x^{2m} - 2a x^m + P^m
  TowerElement Pm = T.pow(T.from_z({p0, p1}), m);
  if (!Pm.in_base_field())
    throw ConstraintViolated("P^m does not lie in C(Y)");
  if (!p1.is_zero()) {
    // implicit case: check the defining identity f = a^2 - P^m
    if (!(T.from_base(al * al - f) == Pm))
      throw ConstraintViolated("f != a^2 - P^m for the supplied data");
  }
  out.modulus = modulus_t2(N, m, al, Pm.base_value());
  out.modulus_holds = modulus_vanishes(T, out.modulus);
  return out;
}

TowerBuild dicyclic_build(long n, const RatFunc& c, const RatFunc& d,
                          const RatFunc& f) {
  if (n < 1) throw InvalidParams("dicyclic_build requires n >= 1");
  long m = 2 * n;
  long N = lcm_ll(lcm_ll(m, 2), lcm_ll(c.order(), lcm_ll(d.order(), f.order())));
  RatFunc cl = c.lifted(N), dl = d.lifted(N), fl = f.lifted(N);
  // constraint f^n = c^2 - d^2 f, exactly
  if (!(fl.pow(n) == cl * cl - dl * dl * fl))
    throw ConstraintViolated("f^n ≠ c² - d² f");
  if (fl.is_zero()) throw ZeroModulus("dicyclic tower needs f != 0");

  TowerSpec spec;
  spec.N = N;
  spec.m = m;
  spec.t = 2;
  spec.r = 2 * n - 1;
  spec.k = n;
  spec.f = fl;
  spec.g = {cl, dl};  // g = c + d w

  TowerBuild out{TowerAlgebra(std::move(spec)), {}, {}, {}, {}, false};
  const TowerAlgebra& T = out.algebra;
  out.sigma = T.define_sigma();
  // tau(x) = w/x: the normalization x tau(x) = z
  out.tau = T.define_tau_p({RatFunc::zero(N), RatFunc::one(N)});
  out.report = verify_group_action(
      T, out.sigma, out.tau, groups::MetacyclicParams{m, n, 2, 2 * n - 1});

  // x^{4n} - 2 c x^{2n} + f^n = 0
  std::vector<RatFunc> mod(4 * n + 1, RatFunc::zero(N));
  mod[0] = fl.pow(n);
  mod[2 * n] = RatFunc::from_rational(N, exact::Rational(-2)) * cl;
  mod[4 * n] = RatFunc::one(N);
  out.modulus = std::move(mod);
  out.modulus_holds = modulus_vanishes(T, out.modulus);
  return out;
}

IrreducibilityProbe irreducibility_probe(const std::vector<RatFunc>& modulus) {
  IrreducibilityProbe out;
  if (modulus.empty()) {
    out.verdict = "unknown";
    return out;
  }
  long N = modulus[0].order();
  auto eval = [&](const RatFunc& x0) {
    RatFunc acc = RatFunc::zero(N);
    for (size_t i = modulus.size(); i-- > 0;) acc = acc * x0 + modulus[i];
    return acc;
  };

  // gcd(p, p') over C(Y)[x] via Euclid with RatFunc coefficients
  using XPoly = std::vector<RatFunc>;
  auto trim = [](XPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
  };
  auto rem = [&](XPoly a, const XPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
      RatFunc q = a.back() / b.back();
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = a[shift + i] - q * b[i];
      a = trim(std::move(a));
    }
    return a;
  };
  XPoly p = trim(modulus);
  XPoly dp;
  for (size_t i = 1; i < p.size(); ++i)
    dp.push_back(RatFunc::from_rational(N, exact::Rational((long long)i)) * p[i]);
  dp = trim(std::move(dp));
  if (p.size() <= 1) {
    out.verdict = "unknown";
    return out;
  }
  XPoly g = p, h = dp;
  while (!h.empty()) {
    XPoly r = rem(g, h);
    g = std::move(h);
    h = std::move(r);
  }
  out.squarefree = g.size() == 1;

  // low-height candidate roots: q*y^e and a*y + b with small constants
  std::vector<RatFunc> candidates;
  auto Y = RatFunc::variable(N);
  std::vector<exact::Rational> consts = {
      exact::Rational(0),  exact::Rational(1),  exact::Rational(-1),
      exact::Rational(2),  exact::Rational(-2), exact::Rational(3),
      exact::Rational(-3), exact::Rational(1, 2), exact::Rational(-1, 2)};
  for (const auto& qa : consts)
    for (const auto& qb : consts) {
      RatFunc cand = RatFunc::from_rational(N, qa) * Y +
                     RatFunc::from_rational(N, qb);
      if (!cand.is_zero()) candidates.push_back(cand);
    }
  for (const auto& qa : consts) {
    if (qa == 0) continue;
    candidates.push_back(RatFunc::from_rational(N, qa) * Y * Y);
    candidates.push_back(RatFunc::from_rational(N, qa) / Y);
  }
  for (const auto& cand : candidates)
    if (eval(cand).is_zero()) {
      out.root = cand;
      break;
    }

  if (out.root) out.verdict = "has-root";
  else if (out.squarefree) out.verdict = "squarefree";
  else out.verdict = "unknown";
  return out;
}

}  // namespace covers::funfield
