#include "covers/pardini.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace covers::pardini {

using exact::gcd_ll;
using exact::lcm_ll;

PicClass pic_zero(const PicardModel& pic) {
  PicClass c;
  c.coords.assign(pic.dim(), 0);
  return c;
}

PicClass pic_reduce(const PicardModel& pic, PicClass c) {
  if ((long)c.coords.size() != pic.dim())
    throw InvalidParams("class has wrong dimension for this Picard model");
  for (size_t i = 0; i < pic.torsion.size(); ++i) {
    long m = pic.torsion[i];
    long& x = c.coords[pic.rank + i];
    x = ((x % m) + m) % m;
  }
  return c;
}

PicClass pic_add(const PicardModel& pic, const PicClass& a, const PicClass& b) {
  PicClass c = a;
  for (size_t i = 0; i < c.coords.size(); ++i) c.coords[i] += b.coords[i];
  return pic_reduce(pic, std::move(c));
}

PicClass pic_sub(const PicardModel& pic, const PicClass& a, const PicClass& b) {
  PicClass c = a;
  for (size_t i = 0; i < c.coords.size(); ++i) c.coords[i] -= b.coords[i];
  return pic_reduce(pic, std::move(c));
}

PicClass pic_scale(const PicardModel& pic, long n, const PicClass& a) {
  PicClass c = a;
  for (auto& x : c.coords) x *= n;
  return pic_reduce(pic, std::move(c));
}

std::string pic_str(const PicClass& c) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < c.coords.size(); ++i) {
    if (i) out << ",";
    out << c.coords[i];
  }
  out << ")";
  return out.str();
}

static long element_order(const FiniteAbelianGroup& A,
                          const std::vector<long>& g) {
  long o = 1;
  for (size_t u = 0; u < A.factors.size(); ++u) {
    long m = A.factors[u];
    long x = ((g[u] % m) + m) % m;
    if (x != 0) o = lcm_ll(o, m / gcd_ll(x, m));
  }
  return o;
}

BranchLabel make_label(const FiniteAbelianGroup& A, PicClass cls,
                       std::vector<long> g, std::string section_name) {
  BranchLabel lab;
  lab.order = element_order(A, g);
  if (lab.order == 1)
    throw InvalidParams("branch label must carry a nontrivial group element");
  lab.divisor_class = std::move(cls);
  lab.g = std::move(g);
  lab.section_name = std::move(section_name);
  return lab;
}

long a_coeff(const FiniteAbelianGroup& A, const std::vector<BranchLabel>& labels,
             const AbChar& chi, long i) {
  const BranchLabel& lab = labels.at(i);
  long mi = lab.order;
  long L = A.lcm_exponent();
  // chi(g_i) = zeta_L^E; it is an m_i-th root of unity, so E = (L/m_i) a
  auto val = abchars::char_eval(A, chi, lab.g);
  long E = *val.root_exponent();
  long step = L / mi;
  if (E % step != 0)
    throw InternalError("a_coeff: chi(g_i) is not an m_i-th root of unity");
  return (E / step) % mi;
}

long epsilon(const FiniteAbelianGroup& A, const std::vector<BranchLabel>& labels,
             const AbChar& chi, const AbChar& chi2, long i) {
  long mi = labels.at(i).order;
  return (a_coeff(A, labels, chi, i) + a_coeff(A, labels, chi2, i)) / mi;
}

PicClass d_class(const BuildingData& bd, const AbChar& chi, const AbChar& chi2) {
  PicClass d = pic_zero(bd.pic);
  for (size_t i = 0; i < bd.labels.size(); ++i)
    if (epsilon(bd.A, bd.labels, chi, chi2, (long)i) == 1)
      d = pic_add(bd.pic, d, bd.labels[i].divisor_class);
  return d;
}

std::vector<FundamentalViolation> check_fundamental(const BuildingData& bd) {
  std::vector<FundamentalViolation> out;
  auto chars = abchars::all_chars(bd.A);
  for (size_t a = 0; a < chars.size(); ++a)
    for (size_t b = a; b < chars.size(); ++b) {
      const AbChar& chi = chars[a];
      const AbChar& chi2 = chars[b];
      PicClass lhs = pic_add(bd.pic, bd.L.at(chi), bd.L.at(chi2));
      AbChar prod = abchars::char_mul(bd.A, chi, chi2);
      PicClass rhs = pic_add(bd.pic, bd.L.at(prod), d_class(bd, chi, chi2));
      if (!(lhs == rhs)) out.push_back({chi, chi2, lhs, rhs});
    }
  return out;
}

BuildingData complete_reduced(const ReducedBuildingData& rbd) {
  if (rbd.gen_chars.size() != rbd.gen_classes.size() || rbd.gen_chars.empty())
    throw InvalidParams("reduced data needs matching generator characters and classes");

  auto complete_in_order = [&](const std::vector<size_t>& order) {
    std::map<AbChar, PicClass> L;
    L[abchars::trivial_char(rbd.A)] = pic_zero(rbd.pic);
    // odometer over generator exponents; digit j ranges over ord(chi_j)
    std::vector<long> ords;
    for (size_t j : order) {
      long o = 1;
      AbChar x = rbd.gen_chars[j];
      AbChar cur = x;
      while (!(cur == abchars::trivial_char(rbd.A))) {
        cur = abchars::char_mul(rbd.A, cur, x);
        ++o;
      }
      ords.push_back(o);
    }
    long total = 1;
    for (long o : ords) total *= o;
    std::vector<long> digits(order.size(), 0);
    AbChar chi = abchars::trivial_char(rbd.A);
    for (long step = 1; step < total; ++step) {
      // increment odometer; on rollover of digit j the accumulated character
      // is recomputed from the digits to keep chi exact
      size_t j = 0;
      while (j < digits.size() && digits[j] + 1 == ords[j]) {
        digits[j] = 0;
        ++j;
      }
      if (j == digits.size()) break;
      ++digits[j];
      AbChar prev_chi = abchars::trivial_char(rbd.A);
      {
        AbChar acc = abchars::trivial_char(rbd.A);
        for (size_t d = 0; d < digits.size(); ++d) {
          long reps = digits[d] - (d == j ? 1 : 0);
          for (long rcount = 0; rcount < reps; ++rcount)
            acc = abchars::char_mul(rbd.A, acc, rbd.gen_chars[order[d]]);
        }
        prev_chi = acc;
      }
      const AbChar& gen = rbd.gen_chars[order[j]];
      chi = abchars::char_mul(rbd.A, prev_chi, gen);
      auto prev_it = L.find(prev_chi);
      if (prev_it == L.end())
        throw InternalError("complete_reduced: predecessor not yet assigned");
      // L(chi * chi_j) = L(chi) + L_j - D_{chi, chi_j}
      PicClass val = pic_add(rbd.pic, prev_it->second, rbd.gen_classes[order[j]]);
      PicClass corr = pic_zero(rbd.pic);
      for (size_t i = 0; i < rbd.labels.size(); ++i)
        if (epsilon(rbd.A, rbd.labels, prev_chi, gen, (long)i) == 1)
          corr = pic_add(rbd.pic, corr, rbd.labels[i].divisor_class);
      val = pic_sub(rbd.pic, val, corr);
      auto [it, inserted] = L.emplace(chi, val);
      if (!inserted && !(it->second == val))
        throw PathDependence("complete_reduced: character " +
                             std::to_string(abchars::char_index(rbd.A, chi)) +
                             " reached with conflicting classes");
    }
    return L;
  };

  std::vector<size_t> fwd(rbd.gen_chars.size());
  std::iota(fwd.begin(), fwd.end(), 0);
  std::vector<size_t> rev(fwd.rbegin(), fwd.rend());

  auto L1 = complete_in_order(fwd);
  auto L2 = complete_in_order(rev);
  if ((long)L1.size() != rbd.A.order())
    throw InvalidParams("generator characters do not generate the full character group");
  if (!(L1 == L2))
    throw PathDependence("complete_reduced: generator reordering changed the result");

  BuildingData bd;
  bd.A = rbd.A;
  bd.pic = rbd.pic;
  bd.labels = rbd.labels;
  bd.L = std::move(L1);
  return bd;
}

bool associativity_check(const FiniteAbelianGroup& A,
                         const std::vector<BranchLabel>& labels) {
  auto chars = abchars::all_chars(A);
  // cache a-coefficients: labels x characters
  std::vector<std::vector<long>> a(labels.size(),
                                   std::vector<long>(chars.size()));
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t c = 0; c < chars.size(); ++c)
      a[i][c] = a_coeff(A, labels, chars[c], (long)i);
  auto eps = [&](size_t i, size_t c1, size_t c2) {
    return (a[i][c1] + a[i][c2]) / labels[i].order;
  };
  for (size_t x = 0; x < chars.size(); ++x)
    for (size_t y = 0; y < chars.size(); ++y) {
      AbChar xy = abchars::char_mul(A, chars[x], chars[y]);
      size_t xyi = (size_t)abchars::char_index(A, xy);
      for (size_t z = 0; z < chars.size(); ++z) {
        AbChar yz = abchars::char_mul(A, chars[y], chars[z]);
        size_t yzi = (size_t)abchars::char_index(A, yz);
        for (size_t i = 0; i < labels.size(); ++i)
          if (eps(i, x, y) + eps(i, xyi, z) != eps(i, y, z) + eps(i, x, yzi))
            return false;
      }
    }
  return true;
}

bool inertia_injection_check(const FiniteAbelianGroup& A,
                             const std::vector<BranchLabel>& labels,
                             const std::vector<long>& subset) {
  if (subset.empty()) throw InvalidParams("inertia check needs a nonempty subset");
  long expected = 1;
  for (long i : subset) expected *= labels.at(i).order;
  // enumerate the sum of the cyclic subgroups <g_i>
  std::set<std::vector<long>> sums;
  std::vector<long> counters(subset.size(), 0);
  while (true) {
    std::vector<long> x(A.factors.size(), 0);
    for (size_t j = 0; j < subset.size(); ++j) {
      const auto& g = labels[subset[j]].g;
      for (size_t u = 0; u < x.size(); ++u)
        x[u] = (long)(((x[u] + (__int128)counters[j] * g[u]) % A.factors[u] +
                       A.factors[u]) % A.factors[u]);
    }
    sums.insert(std::move(x));
    size_t j = 0;
    while (j < counters.size() &&
           counters[j] + 1 == labels[subset[j]].order) {
      counters[j] = 0;
      ++j;
    }
    if (j == counters.size()) break;
    ++counters[j];
  }
  return (long)sums.size() == expected;
}

static std::string char_var(const AbChar& chi) {
  std::ostringstream out;
  out << "z(";
  for (size_t i = 0; i < chi.exponents.size(); ++i) {
    if (i) out << ",";
    out << chi.exponents[i];
  }
  out << ")";
  return out.str();
}

std::vector<std::string> cover_equations(const BuildingData& bd) {
  if (!check_fundamental(bd).empty())
    throw InvalidData("fundamental relations fail; no cover algebra exists");
  std::vector<std::string> lines;
  auto chars = abchars::all_chars(bd.A);
  AbChar triv = abchars::trivial_char(bd.A);
  for (size_t a = 0; a < chars.size(); ++a) {
    if (chars[a] == triv) continue;
    for (size_t b = a; b < chars.size(); ++b) {
      if (chars[b] == triv) continue;
      std::ostringstream line;
      if (a == b)
        line << char_var(chars[a]) << "^2 = ";
      else
        line << char_var(chars[a]) << "*" << char_var(chars[b]) << " = ";
      std::vector<std::string> rhs;
      for (size_t i = 0; i < bd.labels.size(); ++i)
        if (epsilon(bd.A, bd.labels, chars[a], chars[b], (long)i) == 1)
          rhs.push_back(bd.labels[i].section_name);
      AbChar prod = abchars::char_mul(bd.A, chars[a], chars[b]);
      if (!(prod == triv)) rhs.push_back(char_var(prod));
      if (rhs.empty()) rhs.push_back("1");
      for (size_t i = 0; i < rhs.size(); ++i) {
        if (i) line << "*";
        line << rhs[i];
      }
      lines.push_back(line.str());
    }
  }
  return lines;
}

CanonicalClasses canonical_classes(const ReducedBuildingData& rbd,
                                   const PicClass& K_W, long n) {
  CanonicalClasses out;
  out.c1_Lprime = pic_zero(rbd.pic);
  for (const auto& c : rbd.gen_classes)
    out.c1_Lprime = pic_add(rbd.pic, out.c1_Lprime, c);
  out.K_V_descent =
      pic_add(rbd.pic, pic_reduce(rbd.pic, K_W),
              pic_scale(rbd.pic, n - 1, out.c1_Lprime));
  PicClass D = pic_zero(rbd.pic);
  for (const auto& lab : rbd.labels)
    D = pic_add(rbd.pic, D, lab.divisor_class);
  std::ostringstream rule;
  rule << "f^*D = " << n << "*R_red, D = " << pic_str(D);
  out.pullback_rule = rule.str();
  return out;
}

std::vector<PushforwardSummand> pushforward_canonical_plan(
    const PicardModel& pic, long t, const PicClass& c1_Lprime_q,
    const PicClass& omega_Y, const std::vector<long>& u_indices) {
  PicClass base = pic_add(pic, pic_reduce(pic, omega_Y),
                          pic_scale(pic, t - 1, c1_Lprime_q));
  std::vector<PushforwardSummand> plan;
  for (long i : u_indices) plan.push_back({i, base});
  return plan;
}

}  // namespace covers::pardini
