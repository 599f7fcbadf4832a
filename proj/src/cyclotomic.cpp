#include "covers/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace covers::exact {

long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_ll(a, b) * b;
}

long long powmod_ll(long long a, long long e, long long m) {
  if (m == 1) return 0;
  a %= m;
  if (a < 0) a += m;
  long long r = 1;
  while (e > 0) {
    if (e & 1) r = (__int128)r * a % m;
    a = (__int128)a * a % m;
    e >>= 1;
  }
  return r;
}

long long invmod_ll(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1) {
    long long q = g / a1;
    long long t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw InvalidParams("invmod: arguments are not coprime");
  return ((x % m) + m) % m;
}

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// ---- integer polynomial helpers (ascending coefficients) ----

IntPoly ipoly_trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// exact division, b monic-leading or divides exactly (asserted)
IntPoly ipoly_div_exact(IntPoly a, const IntPoly& b) {
  a = ipoly_trim(a);
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  IntPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
  while (a.size() >= b.size()) {
    Int lead = a.back();
    if (lead % b.back() != 0)
      throw InternalError("cyclotomic recursion: division not exact");
    Int c = lead / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a = ipoly_trim(a);
    if (a.empty()) break;
  }
  if (!a.empty()) throw InternalError("cyclotomic recursion: nonzero remainder");
  return q;
}

std::vector<long> divisors_of(long n) {
  std::vector<long> ds;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Per-order context: Phi_N and the reduced powers x^j mod Phi_N shared by
// every value of that order. Built once, cached forever.
struct OrderCtx {
  long n = 1;
  long phi = 1;
  IntPoly phi_poly;
  // x^j mod Phi_N for j in [0, max(n, 2*phi-1))
  std::vector<std::shared_ptr<const std::vector<Rational>>> xpow;
  std::shared_ptr<const std::vector<Rational>> zero_coeffs;
};

std::mutex g_cy_mutex;
std::map<long, IntPoly> g_phi_cache;
std::map<long, std::shared_ptr<const OrderCtx>> g_ctx_cache;

IntPoly cyclo_poly_locked(long n) {
  auto it = g_phi_cache.find(n);
  if (it != g_phi_cache.end()) return it->second;
  IntPoly result;
  if (n == 1) {
    result = {Int(-1), Int(1)};  // x - 1
  } else {
    IntPoly xn1(n + 1, Int(0));
    xn1[0] = -1;
    xn1[n] = 1;
    IntPoly denom = {Int(1)};
    for (long d : divisors_of(n)) {
      if (d == n) continue;
      denom = ipoly_mul(denom, cyclo_poly_locked(d));
    }
    result = ipoly_div_exact(xn1, denom);
  }
  g_phi_cache.emplace(n, result);
  return result;
}

std::shared_ptr<const OrderCtx> order_ctx(long n) {
  if (n < 1) throw InvalidParams("cyclotomic order must be >= 1");
  // per-thread memo avoids the lock on the hot path
  thread_local std::map<long, std::shared_ptr<const OrderCtx>> tl_cache;
  auto tl_it = tl_cache.find(n);
  if (tl_it != tl_cache.end()) return tl_it->second;

  std::lock_guard<std::mutex> lock(g_cy_mutex);
  auto it = g_ctx_cache.find(n);
  if (it != g_ctx_cache.end()) {
    tl_cache.emplace(n, it->second);
    return it->second;
  }

  auto ctx = std::make_shared<OrderCtx>();
  ctx->n = n;
  ctx->phi_poly = cyclo_poly_locked(n);
  ctx->phi = (long)ctx->phi_poly.size() - 1;
  long table_len = std::max<long>(n, 2 * ctx->phi - 1);
  ctx->xpow.reserve(table_len);
  std::vector<Rational> cur(ctx->phi, Rational(0));
  for (long j = 0; j < table_len; ++j) {
    if (j == 0) {
      cur[0] = 1;
    } else {
      // shift by one, fold the overflow through x^phi = -(lower part of Phi)
      Rational top = cur[ctx->phi - 1];
      for (long i = ctx->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (long i = 0; i < ctx->phi; ++i)
          cur[i] -= top * Rational(ctx->phi_poly[i]);
      }
    }
    ctx->xpow.push_back(
        std::make_shared<const std::vector<Rational>>(cur));
  }
  ctx->zero_coeffs = std::make_shared<const std::vector<Rational>>(
      std::vector<Rational>(ctx->phi, Rational(0)));
  g_ctx_cache.emplace(n, ctx);
  tl_cache.emplace(n, ctx);
  return ctx;
}

long mod_order(long k, long n) {
  k %= n;
  if (k < 0) k += n;
  return k;
}

}  // namespace

IntPoly cyclotomic_polynomial(long n) {
  if (n < 1) throw InvalidParams("cyclotomic order must be >= 1");
  std::lock_guard<std::mutex> lock(g_cy_mutex);
  return cyclo_poly_locked(n);
}

Cyclotomic::Cyclotomic() : Cyclotomic(zero(1)) {}

Cyclotomic::Cyclotomic(long order,
                       std::shared_ptr<const std::vector<Rational>> coeffs,
                       long root_exp, Raw)
    : order_(order), coeffs_(std::move(coeffs)), root_exp_(root_exp) {}

Cyclotomic Cyclotomic::make(long order, std::vector<Rational> coeffs) {
  // detect a pure power of zeta so later products stay O(1)
  long exp = -1;
  int nonzero = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) {
      ++nonzero;
      if (nonzero == 1 && coeffs[i] == 1) exp = (long)i;
      else exp = -1;
    }
  }
  if (nonzero != 1) exp = -1;
  return Cyclotomic(order,
                    std::make_shared<const std::vector<Rational>>(
                        std::move(coeffs)),
                    exp, Raw{});
}

Cyclotomic Cyclotomic::zero(long order) {
  auto ctx = order_ctx(order);
  return Cyclotomic(order, ctx->zero_coeffs, -1, Raw{});
}

Cyclotomic Cyclotomic::one(long order) { return root_of_unity(order, 0); }

Cyclotomic Cyclotomic::from_rational(long order, const Rational& value) {
  if (value == 0) return zero(order);
  if (value == 1) return one(order);
  auto ctx = order_ctx(order);
  std::vector<Rational> c(ctx->phi, Rational(0));
  c[0] = value;
  return make(order, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(long order, long k) {
  auto ctx = order_ctx(order);
  long e = mod_order(k, order);
  // shared table entry: zero-copy construction
  return Cyclotomic(order, ctx->xpow[e], e, Raw{});
}

bool Cyclotomic::is_zero() const {
  if (root_exp_ >= 0) return false;
  for (const auto& c : *coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (root_exp_ == 0) return true;
  if (root_exp_ > 0) {
    // a tagged power can still reduce to 1 at orders 1 and 2
    return (*coeffs_)[0] == 1 &&
           std::all_of(coeffs_->begin() + 1, coeffs_->end(),
                       [](const Rational& c) { return c == 0; });
  }
  if ((*coeffs_)[0] != 1) return false;
  for (size_t i = 1; i < coeffs_->size(); ++i)
    if ((*coeffs_)[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_->size(); ++i)
    if ((*coeffs_)[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational())
    throw InvalidParams("cyclotomic value is not rational");
  return (*coeffs_)[0];
}

std::optional<long> Cyclotomic::root_exponent() const {
  if (root_exp_ >= 0) return root_exp_;
  return std::nullopt;
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> c(*coeffs_);
  for (auto& x : c) x = -x;
  return make(order_, std::move(c));
}

static void require_same_order(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order())
    throw OrderMismatch("cyclotomic operands have orders " +
                        std::to_string(a.order()) + " and " +
                        std::to_string(b.order()) +
                        "; lift to a common order first");
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_order(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<Rational> c(*a.coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += (*b.coeffs_)[i];
  return Cyclotomic::make(a.order_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_order(a, b);
  if (b.is_zero()) return a;
  std::vector<Rational> c(*a.coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= (*b.coeffs_)[i];
  return Cyclotomic::make(a.order_, std::move(c));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_order(a, b);
  if (a.root_exp_ >= 0 && b.root_exp_ >= 0)
    return Cyclotomic::root_of_unity(a.order_, a.root_exp_ + b.root_exp_);
  if (a.is_zero() || b.is_zero()) return Cyclotomic::zero(a.order_);
  auto ctx = order_ctx(a.order_);
  long phi = ctx->phi;
  std::vector<Rational> conv(2 * phi - 1, Rational(0));
  for (long i = 0; i < phi; ++i) {
    const Rational& ai = (*a.coeffs_)[i];
    if (ai == 0) continue;
    for (long j = 0; j < phi; ++j) {
      const Rational& bj = (*b.coeffs_)[j];
      if (bj == 0) continue;
      conv[i + j] += ai * bj;
    }
  }
  std::vector<Rational> c(conv.begin(), conv.begin() + phi);
  for (long j = phi; j < 2 * phi - 1; ++j) {
    if (conv[j] == 0) continue;
    const auto& red = *ctx->xpow[j];
    for (long i = 0; i < phi; ++i)
      if (red[i] != 0) c[i] += conv[j] * red[i];
  }
  return Cyclotomic::make(a.order_, std::move(c));
}

Cyclotomic operator*(const Rational& c, const Cyclotomic& a) {
  if (c == 0) return Cyclotomic::zero(a.order());
  if (c == 1) return a;
  std::vector<Rational> v(a.coeffs());
  for (auto& x : v) x *= c;
  return Cyclotomic::make(a.order(), std::move(v));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
  return a * b.inverse();
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic value");
  if (root_exp_ >= 0) return root_of_unity(order_, order_ - root_exp_);
  auto ctx = order_ctx(order_);
  long phi = ctx->phi;
  // extended Euclid in Q[x] against Phi_N (irreducible over Q)
  using QPoly = std::vector<Rational>;
  auto trim = [](QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
  };
  QPoly r0(ctx->phi_poly.size());
  for (size_t i = 0; i < ctx->phi_poly.size(); ++i)
    r0[i] = Rational(ctx->phi_poly[i]);
  QPoly r1 = trim(*coeffs_);
  QPoly s0 = {}, s1 = {Rational(1)};  // coefficients of *this in the Bezout combo
  while (!r1.empty()) {
    // r0 = q*r1 + r, degree-lowering division
    QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0,
            Rational(0));
    QPoly r = r0;
    while (r.size() >= r1.size() && !r.empty()) {
      Rational c = r.back() / r1.back();
      size_t shift = r.size() - r1.size();
      q[shift] += c;
      for (size_t i = 0; i < r1.size(); ++i) r[shift + i] -= c * r1[i];
      r = trim(r);
    }
    // s = s0 - q*s1
    QPoly qs1;
    if (!q.empty() && !s1.empty()) {
      qs1.assign(q.size() + s1.size() - 1, Rational(0));
      for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (size_t j = 0; j < s1.size(); ++j) qs1[i + j] += q[i] * s1[j];
      }
    }
    QPoly s(std::max(s0.size(), qs1.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s[i] += s0[i];
    for (size_t i = 0; i < qs1.size(); ++i) s[i] -= qs1[i];
    s = trim(s);
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
  }
  // r0 is a nonzero constant gcd; s0 * this = r0 (mod Phi)
  if (r0.size() != 1)
    throw InternalError("cyclotomic inverse: gcd with Phi_N not constant");
  std::vector<Rational> inv(phi, Rational(0));
  for (size_t i = 0; i < s0.size() && i < (size_t)phi; ++i)
    inv[i] = s0[i] / r0[0];
  return make(order_, std::move(inv));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (root_exp_ >= 0) {
    long r = (long)(((__int128)root_exp_ * (e % order_)) % order_);
    return root_of_unity(order_, r);
  }
  Cyclotomic result = one(order_);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Cyclotomic Cyclotomic::conj() const {
  if (root_exp_ >= 0)
    return root_of_unity(order_, order_ - root_exp_);
  auto ctx = order_ctx(order_);
  std::vector<Rational> c(ctx->phi, Rational(0));
  for (long i = 0; i < ctx->phi; ++i) {
    const Rational& ci = (*coeffs_)[i];
    if (ci == 0) continue;
    const auto& red = *ctx->xpow[mod_order(order_ - i, order_)];
    for (long j = 0; j < ctx->phi; ++j)
      if (red[j] != 0) c[j] += ci * red[j];
  }
  return make(order_, std::move(c));
}

Cyclotomic Cyclotomic::lifted(long new_order) const {
  if (new_order % order_ != 0)
    throw NotDivisible("cannot lift from order " + std::to_string(order_) +
                       " to non-multiple order " + std::to_string(new_order));
  if (new_order == order_) return *this;
  long step = new_order / order_;
  if (root_exp_ >= 0)
    return root_of_unity(new_order, root_exp_ * step);
  auto ctx = order_ctx(new_order);
  std::vector<Rational> c(ctx->phi, Rational(0));
  for (size_t i = 0; i < coeffs_->size(); ++i) {
    const Rational& ci = (*coeffs_)[i];
    if (ci == 0) continue;
    const auto& red = *ctx->xpow[(long)i * step];
    for (long j = 0; j < ctx->phi; ++j)
      if (red[j] != 0) c[j] += ci * red[j];
  }
  return make(new_order, std::move(c));
}

std::optional<long> Cyclotomic::multiplicative_order() const {
  if (is_zero()) throw DivisionByZero("multiplicative order of zero");
  // roots of unity in Q(zeta_N) all have order dividing N (N even) or 2N
  long bound = (order_ % 2 == 0) ? order_ : 2 * order_;
  if (!pow(bound).is_one()) return std::nullopt;
  for (long d = 1; d <= bound; ++d)
    if (bound % d == 0 && pow(d).is_one()) return d;
  return bound;
}

bool Cyclotomic::operator==(const Cyclotomic& other) const {
  require_same_order(*this, other);
  if (root_exp_ >= 0 && other.root_exp_ >= 0)
    return root_exp_ == other.root_exp_;
  return *coeffs_ == *other.coeffs_;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = (long)coeffs_->size() - 1; i >= 0; --i) {
    const Rational& c = (*coeffs_)[i];
    if (c == 0) continue;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << rat_str(abs_c);
    } else {
      if (abs_c != 1) out << rat_str(abs_c) << "*";
      out << "zeta(" << order_ << ")";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> z(0.0, 0.0);
  const double tau = 6.283185307179586476925287;
  for (size_t i = 0; i < coeffs_->size(); ++i) {
    const Rational& c = (*coeffs_)[i];
    if (c == 0) continue;
    double cd = c.convert_to<double>();
    double ang = tau * (double)i / (double)order_;
    z += cd * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

}  // namespace covers::exact
