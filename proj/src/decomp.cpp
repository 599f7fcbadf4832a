#include "covers/decomp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace covers::decomp {

using exact::Cyclotomic;
using exact::gcd_ll;

std::vector<Element> rep_kernel(const MetacyclicParams& p, const Irrep& irrep,
                                long bound) {
  groups::require_valid(p);
  long mt = p.m * p.t;
  if (mt > bound)
    throw BoundExceeded("rep_kernel bound " + std::to_string(bound) +
                        " exceeded by order " + std::to_string(mt));
  auto M = reps::rep_matrices(p, irrep);
  reps::CycMatrix I = reps::mat_identity(irrep.dim, mt);
  std::vector<reps::CycMatrix> tau_pows{I};
  for (long b = 1; b < p.t; ++b)
    tau_pows.push_back(reps::mat_mul(tau_pows.back(), M.Ttau));
  std::vector<Element> kernel;
  reps::CycMatrix sig_a = I;
  for (long a = 0; a < p.m; ++a) {
    for (long b = 0; b < p.t; ++b)
      if (reps::mat_eq(reps::mat_mul(sig_a, tau_pows[b]), I))
        kernel.push_back(Element{a, b});
    sig_a = reps::mat_mul(sig_a, M.Tsigma);
  }
  // normal subgroup sanity: closure and conjugation stability
  std::set<Element> kset(kernel.begin(), kernel.end());
  for (const auto& x : kernel)
    for (const auto& y : kernel)
      if (!kset.count(groups::mc_mul(p, x, y)))
        throw InternalError("rep_kernel: kernel not closed under multiplication");
  for (const auto& x : kernel)
    for (const auto& g : groups::mc_elements(p)) {
      Element c = groups::mc_mul(p, groups::mc_mul(p, groups::mc_inv(p, g), x), g);
      if (!kset.count(c))
        throw InternalError("rep_kernel: kernel not normal");
    }
  return kernel;
}

DecompPlan decomposition_plan(const MetacyclicParams& p) {
  groups::require_valid(p);
  DecompPlan plan;
  plan.params = p;
  long mt = p.m * p.t;
  for (const auto& orb : reps::orbits(p.m, p.r)) {
    Block blk;
    blk.orbit = orb;
    if (orb.size == p.t) {
      blk.kind = Block::Kind::Full;
      long idx = orb.rep;
      for (long j = 0; j < p.t; ++j) {
        blk.u_indices.push_back(idx);
        idx = (long)((__int128)idx * p.r % p.m);
      }
      // theta = zeta_i^k = zeta_{mt}^{t l k}; must be the unique solution
      blk.theta_exp = (long)((__int128)p.t * orb.rep % mt * p.k % mt);
      auto sols = reps::thetas(p, orb);
      if (sols.size() != 1 || sols[0] != blk.theta_exp)
        throw InternalError("decomposition_plan: theta mismatch on full orbit");
      plan.nu += 1;
    } else {
      blk.kind = Block::Kind::Descends;
      auto ths = reps::thetas(p, orb);
      plan.nu += (long)ths.size();
      bool first = true;
      std::set<Element> inter;
      for (long th : ths) {
        Irrep ir;
        ir.orbit = orb;
        ir.theta_exp = th;
        ir.dim = orb.size;
        auto ker = rep_kernel(p, ir);
        std::set<Element> kset(ker.begin(), ker.end());
        if (first) {
          inter = std::move(kset);
          first = false;
        } else {
          std::set<Element> next;
          for (const auto& e : inter)
            if (kset.count(e)) next.insert(e);
          inter = std::move(next);
        }
      }
      blk.kernel.assign(inter.begin(), inter.end());
      blk.quotient_order = mt / (long)blk.kernel.size();
    }
    plan.blocks.push_back(std::move(blk));
  }
  // rank accounting: sum over blocks of t * t(zeta) = mt
  long rank = 0;
  for (const auto& blk : plan.blocks) rank += p.t * blk.orbit.size;
  if (rank != mt)
    throw InternalError("decomposition_plan: rank accounting failed");
  return plan;
}

CorollaryCounts corollary_counts(const MetacyclicParams& p) {
  groups::require_valid(p);
  auto is_prime = [](long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  if (!is_prime(p.t))
    throw NotPrime("t = " + std::to_string(p.t) + " is not prime");
  CorollaryCounts out;
  out.b = gcd_ll(p.r - 1, p.m);  // gcd(0, m) = m covers r = 1
  if ((p.m - out.b) % p.t != 0)
    throw InternalError("corollary_counts: (m - b)/t is not an integer");
  out.h = (p.m - out.b) / p.t;
  long singles = 0, fulls = 0;
  for (const auto& orb : reps::orbits(p.m, p.r)) {
    if (orb.size == 1) ++singles;
    else if (orb.size == p.t) ++fulls;
    else throw InternalError("corollary_counts: orbit size neither 1 nor t");
  }
  if (singles != out.b || fulls != out.h)
    throw InternalError("corollary_counts: orbit census mismatch");
  return out;
}

UTwist u_twist(const MetacyclicParams& p, long i) {
  groups::require_valid(p);
  UTwist tw;
  tw.source = ((i % p.m) + p.m) % p.m;
  tw.image = (long)((__int128)tw.source * p.r % p.m);
  tw.t_power_scalar = Cyclotomic::root_of_unity(p.m, p.k);
  return tw;
}

CoverDataReport check_metabelian_cover_data(const MetabelianCoverData& data) {
  groups::require_valid(data.pres);
  CoverDataReport rep;
  const auto& pres = data.pres;
  abchars::FiniteAbelianGroup A{pres.sigma_orders};
  long nchars = A.order();
  long l = (long)pres.tau_orders.size();
  long s = (long)pres.sigma_orders.size();

  auto perm_ok = [&](const std::vector<long>& perm) {
    if ((long)perm.size() != nchars) return false;
    std::vector<char> hit(nchars, 0);
    for (long v : perm) {
      if (v < 0 || v >= nchars || hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  };

  // (a) divisor permutations must be the one-step twist chi -> chi^{(1)}_j
  rep.divisor_perms_ok = (long)data.divisor_perm.size() == l;
  for (long j = 0; j < l && rep.divisor_perms_ok; ++j) {
    if (!perm_ok(data.divisor_perm[j])) {
      rep.divisor_perms_ok = false;
      rep.mismatches.push_back("divisor permutation " + std::to_string(j + 1) +
                               " is not a bijection of the character set");
      break;
    }
    for (long c = 0; c < nchars; ++c) {
      auto chi = abchars::char_at(A, c);
      long want = abchars::char_index(A, abchars::twist_char(pres, chi, j, 1));
      if (data.divisor_perm[j][c] != want) {
        rep.divisor_perms_ok = false;
        std::ostringstream msg;
        msg << "divisor permutation " << j + 1 << " sends character " << c
            << " to " << data.divisor_perm[j][c] << ", twist requires " << want;
        rep.mismatches.push_back(msg.str());
      }
    }
  }

  // (b) iterated sheaf permutation must match chi -> chi^{(gamma)}_j and
  // return to the identity after a_j steps
  rep.sheaf_perms_ok = (long)data.sheaf_perm.size() == l;
  for (long j = 0; j < l && rep.sheaf_perms_ok; ++j) {
    if (!perm_ok(data.sheaf_perm[j])) {
      rep.sheaf_perms_ok = false;
      rep.mismatches.push_back("sheaf permutation " + std::to_string(j + 1) +
                               " is not a bijection of the character set");
      break;
    }
    std::vector<long> iter(nchars);
    for (long c = 0; c < nchars; ++c) iter[c] = c;
    for (long gamma = 1; gamma <= pres.tau_orders[j]; ++gamma) {
      for (long c = 0; c < nchars; ++c) iter[c] = data.sheaf_perm[j][iter[c]];
      for (long c = 0; c < nchars; ++c) {
        auto chi = abchars::char_at(A, c);
        long want =
            abchars::char_index(A, abchars::twist_char(pres, chi, j, gamma));
        if (iter[c] != want) {
          rep.sheaf_perms_ok = false;
          std::ostringstream msg;
          msg << "sheaf permutation " << j + 1 << " iterated " << gamma
              << " times sends character " << c << " to " << iter[c]
              << ", twist requires " << want;
          rep.mismatches.push_back(msg.str());
          gamma = pres.tau_orders[j] + 1;
          break;
        }
      }
    }
  }

  // (c) declared scalars must equal zeta_{m_i}^{k_{ij}} with the right order
  rep.scalars_ok = (long)data.scalars.size() == s;
  for (long i = 0; i < s && rep.scalars_ok; ++i) {
    if ((long)data.scalars[i].size() != l) {
      rep.scalars_ok = false;
      rep.mismatches.push_back("scalar table has wrong shape");
      break;
    }
    for (long j = 0; j < l; ++j) {
      long mi = pres.sigma_orders[i];
      long kij = pres.kvec[j][i];
      auto [zo, ze] = data.scalars[i][j];
      if (zo < 1) {
        rep.scalars_ok = false;
        rep.mismatches.push_back("scalar has nonpositive zeta order");
        continue;
      }
      long common = exact::lcm_ll(zo, mi);
      Cyclotomic declared = Cyclotomic::root_of_unity(zo, ze).lifted(common);
      Cyclotomic expected = Cyclotomic::root_of_unity(mi, kij).lifted(common);
      if (declared != expected) {
        std::ostringstream msg;
        msg << "scalar for (sigma_" << i + 1 << ", tau_" << j + 1
            << ") is not exp(2*pi*i*k_ij/m_i) with k_ij = " << kij
            << ", m_i = " << mi;
        rep.mismatches.push_back(msg.str());
        rep.scalars_ok = false;
        continue;
      }
      long expect_order = kij % mi == 0 ? 1 : mi / gcd_ll(kij % mi, mi);
      auto mo = declared.multiplicative_order();
      if (!mo || *mo != expect_order) {
        rep.scalars_ok = false;
        rep.mismatches.push_back("scalar multiplicative order mismatch");
      }
    }
  }

  rep.valid = rep.divisor_perms_ok && rep.sheaf_perms_ok && rep.scalars_ok;
  return rep;
}

QLevelReport q_level_check(const pardini::PicardModel& pic, long t,
                           const pardini::PicClass& L_gen,
                           const std::vector<pardini::PicClass>& B) {
  QLevelReport out;
  if (t <= 1) {  // trivial N
    out.pass = true;
    return out;
  }
  pardini::ReducedBuildingData rbd;
  rbd.A = abchars::FiniteAbelianGroup{{t}};
  rbd.pic = pic;
  for (size_t i = 0; i < B.size(); ++i)
    rbd.labels.push_back(pardini::make_label(
        rbd.A, B[i], {1}, "s" + std::to_string(i + 1)));
  rbd.gen_chars = {abchars::AbChar{{1}}};
  rbd.gen_classes = {L_gen};
  auto bd = pardini::complete_reduced(rbd);
  auto violations = pardini::check_fundamental(bd);
  out.pass = violations.empty();
  for (const auto& v : violations) {
    std::ostringstream msg;
    msg << "L_eta + L_eta' ≢ L_{eta eta'} + sum eps B_i at characters ("
        << abchars::char_index(bd.A, v.chi) << ","
        << abchars::char_index(bd.A, v.chi2) << "): " << pardini::pic_str(v.lhs)
        << " vs " << pardini::pic_str(v.rhs);
    out.violations.push_back(msg.str());
  }
  return out;
}

}  // namespace covers::decomp
