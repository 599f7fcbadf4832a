// coverkit: exact-arithmetic toolkit for metacyclic and metabelian Galois
// cover data: group presentations, irreducible representations, abelian-cover
// building data, eigensheaf decomposition plans and function-field towers.
//
// Exit codes: 0 valid/success, 1 mathematically invalid input data,
// 2 usage or parse errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "covers/decomp.hpp"
#include "covers/expr.hpp"
#include "covers/json_io.hpp"
#include "covers/tower.hpp"

using namespace covers;
using io::json;

namespace {

struct Options {
  std::string format = "text";
  bool approx = false;
};

std::string render_cyclo(const exact::Cyclotomic& c, bool approx) {
  std::string s = c.str();
  if (approx) {
    auto z = c.approx();
    std::ostringstream out;
    out << s << " (~" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag()
        << "i)";
    return out.str();
  }
  return s;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::SchemaError("cannot open input file " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw io::SchemaError(std::string("JSON parse error: ") + e.what());
  }
  return j;
}

void emit(const json& j) { std::cout << io::dump(j); }

int report_invalid(const groups::MetacyclicReport& rep, const Options& opt) {
  if (opt.format == "json") {
    json j{{"valid", false}, {"failures", rep.failures}};
    emit(j);
  } else {
    std::cout << "invalid parameters:\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
  }
  return 1;
}

// ---- group ----

int cmd_group_info(const groups::MetacyclicParams& p, const Options& opt) {
  auto rep = groups::validate_metacyclic(p);
  if (opt.format == "json") {
    json j{{"params", io::params_to_json(p)},
           {"valid", rep.valid},
           {"conditions",
            json{{"r_pow_t", rep.cond_r_pow_t},
                 {"k_r", rep.cond_k_r},
                 {"gcd_r_m", rep.cond_gcd_r_m},
                 {"ranges", rep.ranges_ok}}},
           {"failures", rep.failures}};
    if (rep.valid) {
      j["order"] = p.m * p.t;
      j["ord_tau"] = p.m * p.t / exact::gcd_ll(p.k, p.m);
      j["split"] = rep.split;
      j["abelian"] = rep.abelian;
      j["cyclic_if_gcd_km_1"] = rep.cyclic_flag;
      j["t_minimal_heuristic"] = rep.t_minimal_heuristic;
    }
    emit(j);
    return rep.valid ? 0 : 1;
  }
  std::cout << "G_{" << p.m << "," << p.k << "," << p.t << "," << p.r << "}\n";
  auto line = [](const std::string& name, bool ok) {
    std::cout << "  " << name << ": " << (ok ? "ok" : "FAIL") << "\n";
  };
  line("r^t ≡ 1 (mod m)", rep.cond_r_pow_t);
  line("kr ≡ k (mod m)", rep.cond_k_r);
  line("gcd(r, m) = 1", rep.cond_gcd_r_m);
  if (!rep.ranges_ok) std::cout << "  parameter ranges: FAIL\n";
  if (!rep.valid) return 1;
  std::cout << "  |G| = " << p.m * p.t << "\n";
  std::cout << "  ord(tau) = mt/gcd(k,m) = " << p.m * p.t / exact::gcd_ll(p.k, p.m)
            << "\n";
  std::cout << "  split (k = m): " << (rep.split ? "yes" : "no") << "\n";
  std::cout << "  abelian (r ≡ 1 mod m): " << (rep.abelian ? "yes" : "no")
            << "\n";
  std::cout << "  gcd(k, m) = 1 forces cyclic: " << (rep.cyclic_flag ? "yes" : "no")
            << "\n";
  std::cout << "  t minimal (heuristic): "
            << (rep.t_minimal_heuristic ? "yes" : "no") << "\n";
  return 0;
}

int cmd_group_iso(const groups::MetacyclicParams& p1,
                  const groups::MetacyclicParams& p2, const Options& opt) {
  bool iso = groups::iso_check(p1, p2);
  if (opt.format == "json")
    emit(json{{"first", io::params_to_json(p1)},
              {"second", io::params_to_json(p2)},
              {"isomorphic", iso}});
  else
    std::cout << "isomorphic: " << (iso ? "yes" : "no") << "\n";
  return 0;
}

// ---- orbits / reps ----

int cmd_orbits(long m, long r, const Options& opt) {
  auto orbs = reps::orbits(m, r);
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& o : orbs)
      arr.push_back(json{{"rep", o.rep}, {"size", o.size}, {"elements", o.elements}});
    emit(json{{"m", m}, {"r", r}, {"orbits", arr}});
    return 0;
  }
  std::cout << orbs.size() << " orbits of zeta -> zeta^" << r << " on U_" << m
            << ":\n";
  for (const auto& o : orbs) {
    std::cout << "  {";
    for (size_t i = 0; i < o.elements.size(); ++i)
      std::cout << (i ? "," : "") << o.elements[i];
    std::cout << "} (size " << o.size << ")\n";
  }
  return 0;
}

int cmd_reps_list(const groups::MetacyclicParams& p, const Options& opt) {
  auto rep = groups::validate_metacyclic(p);
  if (!rep.valid) return report_invalid(rep, opt);
  auto irs = reps::irreps(p);
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& ir : irs)
      arr.push_back(json{{"orbit_rep", ir.orbit.rep},
                         {"orbit", ir.orbit.elements},
                         {"theta_exponent", ir.theta_exp},
                         {"dim", ir.dim}});
    emit(json{{"params", io::params_to_json(p)},
              {"nu", (long)irs.size()},
              {"irreps", arr}});
    return 0;
  }
  std::cout << "nu = " << irs.size() << " irreducible representations of G_{"
            << p.m << "," << p.k << "," << p.t << "," << p.r << "}\n";
  long mt = p.m * p.t;
  for (size_t i = 0; i < irs.size(); ++i) {
    const auto& ir = irs[i];
    std::cout << "  [" << i + 1 << "] dim " << ir.dim << ", orbit rep "
              << ir.orbit.rep << ", theta = zeta(" << mt << ")^" << ir.theta_exp
              << "\n";
  }
  return 0;
}

int cmd_reps_table(const groups::MetacyclicParams& p, const Options& opt) {
  auto rep = groups::validate_metacyclic(p);
  if (!rep.valid) return report_invalid(rep, opt);
  auto table = reps::character_table(p);
  if (opt.format == "json") {
    emit(io::char_table_to_json(p, table));
    return 0;
  }
  std::cout << "character table of G_{" << p.m << "," << p.k << "," << p.t
            << "," << p.r << "} (" << table.classes.size() << " classes)\n";
  std::cout << "classes (representatives):";
  for (const auto& cls : table.classes)
    std::cout << " s^" << cls.front().a << " t^" << cls.front().b;
  std::cout << "\n";
  for (size_t i = 0; i < table.rows.size(); ++i) {
    std::cout << "  chi_" << i + 1 << " (dim " << table.rows[i].dim << "):";
    for (const auto& v : table.values[i])
      std::cout << "  " << render_cyclo(v, opt.approx);
    std::cout << "\n";
  }
  return 0;
}

// ---- decompose / corollary ----

int cmd_decompose(const groups::MetacyclicParams& p, const Options& opt) {
  auto rep = groups::validate_metacyclic(p);
  if (!rep.valid) return report_invalid(rep, opt);
  auto plan = decomp::decomposition_plan(p);
  if (opt.format == "json") {
    emit(io::plan_to_json(plan));
    return 0;
  }
  std::cout << "pi_* O_X decomposition for G_{" << p.m << "," << p.k << ","
            << p.t << "," << p.r << "}: nu = " << plan.nu << "\n";
  for (const auto& blk : plan.blocks) {
    std::cout << "  orbit {";
    for (size_t i = 0; i < blk.orbit.elements.size(); ++i)
      std::cout << (i ? "," : "") << blk.orbit.elements[i];
    std::cout << "}: ";
    if (blk.kind == decomp::Block::Kind::Full) {
      std::cout << "full block U_" << blk.u_indices[0];
      for (size_t i = 1; i < blk.u_indices.size(); ++i)
        std::cout << " + U_" << blk.u_indices[i];
      std::cout << ", theta = zeta(" << p.m * p.t << ")^" << blk.theta_exp
                << "\n";
    } else {
      std::cout << "descends through kernel of order " << blk.kernel.size()
                << " (quotient order " << blk.quotient_order << ")\n";
    }
  }
  return 0;
}

int cmd_corollary(const groups::MetacyclicParams& p, const Options& opt) {
  auto rep = groups::validate_metacyclic(p);
  if (!rep.valid) return report_invalid(rep, opt);
  auto counts = decomp::corollary_counts(p);
  if (opt.format == "json")
    emit(json{{"params", io::params_to_json(p)},
              {"b", counts.b},
              {"h", counts.h}});
  else
    std::cout << "b = gcd(r-1, m) = " << counts.b << ", h = (m-b)/t = "
              << counts.h << "\n";
  return 0;
}

// ---- abelian ----

int cmd_abelian_check(const json& input, const Options& opt) {
  auto bd = io::building_data_from_json(input);
  auto violations = pardini::check_fundamental(bd);
  bool assoc = pardini::associativity_check(bd.A, bd.labels);
  if (opt.format == "json") {
    json v = json::array();
    for (const auto& viol : violations)
      v.push_back(json{{"chi", viol.chi.exponents},
                       {"chi2", viol.chi2.exponents},
                       {"lhs", viol.lhs.coords},
                       {"rhs", viol.rhs.coords}});
    emit(json{{"fundamental_relations_hold", violations.empty()},
              {"epsilon_cocycle_holds", assoc},
              {"violations", v}});
  } else {
    if (violations.empty()) {
      std::cout << "fundamental relations hold for all character pairs\n";
    } else {
      std::cout << violations.size() << " violations of L_chi + L_chi' ≡ "
                << "L_{chi chi'} + D_{chi,chi'}:\n";
      for (const auto& v : violations) {
        std::cout << "  chi=(";
        for (size_t i = 0; i < v.chi.exponents.size(); ++i)
          std::cout << (i ? "," : "") << v.chi.exponents[i];
        std::cout << ") chi'=(";
        for (size_t i = 0; i < v.chi2.exponents.size(); ++i)
          std::cout << (i ? "," : "") << v.chi2.exponents[i];
        std::cout << "): " << pardini::pic_str(v.lhs) << " ≠ "
                  << pardini::pic_str(v.rhs) << "\n";
      }
    }
    std::cout << "epsilon cocycle: " << (assoc ? "ok" : "FAIL") << "\n";
  }
  return violations.empty() && assoc ? 0 : 1;
}

int cmd_abelian_complete(const json& input, const Options& opt) {
  auto rbd = io::reduced_data_from_json(input);
  auto bd = pardini::complete_reduced(rbd);
  if (opt.format == "json") {
    emit(io::building_data_to_json(bd));
  } else {
    for (const auto& [chi, cls] : bd.L) {
      std::cout << "L(";
      for (size_t i = 0; i < chi.exponents.size(); ++i)
        std::cout << (i ? "," : "") << chi.exponents[i];
      std::cout << ") = " << pardini::pic_str(cls) << "\n";
    }
  }
  return 0;
}

int cmd_abelian_equations(const json& input, const Options& opt) {
  auto bd = io::building_data_from_json(input);
  auto eqs = pardini::cover_equations(bd);
  if (opt.format == "json") {
    emit(json{{"equations", eqs}});
  } else {
    for (const auto& e : eqs) std::cout << e << "\n";
  }
  return 0;
}

int cmd_abelian_canonical(const json& input, const Options& opt) {
  auto rbd = io::reduced_data_from_json(input);
  auto kw = io::k_w_from_json(input);
  if (!kw) throw io::SchemaError("canonical requires a K_W field");
  long n = rbd.A.order();
  auto cc = pardini::canonical_classes(rbd, *kw, n);
  if (opt.format == "json") {
    emit(json{{"n", n},
              {"c1_Lprime", cc.c1_Lprime.coords},
              {"K_V_descent", cc.K_V_descent.coords},
              {"pullback_rule", cc.pullback_rule}});
  } else {
    std::cout << "c1(L') = " << pardini::pic_str(cc.c1_Lprime) << "\n";
    std::cout << "K_V = f^*(" << pardini::pic_str(cc.K_V_descent) << ")\n";
    std::cout << cc.pullback_rule << "\n";
  }
  return 0;
}

// ---- metabelian ----

int cmd_metabelian_check(const json& input, const Options& opt) {
  groups::MetabelianPresentation pres;
  std::optional<decomp::MetabelianCoverData> cover;
  if (input.contains("presentation")) {
    cover = io::cover_data_from_json(input);
    pres = cover->pres;
  } else {
    pres = io::metabelian_from_json(input);
  }
  auto rep = groups::validate_metabelian(pres);
  json jrep{{"presentation_valid", rep.valid}, {"failures", rep.failures}};
  bool ok = rep.valid;
  if (rep.valid && cover) {
    auto crep = decomp::check_metabelian_cover_data(*cover);
    ok = crep.valid;
    jrep["cover_data_valid"] = crep.valid;
    jrep["mismatches"] = crep.mismatches;
    if (opt.format != "json") {
      std::cout << "presentation: ok\n";
      std::cout << "divisor permutations: "
                << (crep.divisor_perms_ok ? "ok" : "FAIL") << "\n";
      std::cout << "sheaf permutations: "
                << (crep.sheaf_perms_ok ? "ok" : "FAIL") << "\n";
      std::cout << "scalars: " << (crep.scalars_ok ? "ok" : "FAIL") << "\n";
      for (const auto& m : crep.mismatches) std::cout << "  " << m << "\n";
    }
  } else if (opt.format != "json") {
    std::cout << "presentation: " << (rep.valid ? "ok" : "FAIL") << "\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
  }
  if (opt.format == "json") emit(jrep);
  return ok ? 0 : 1;
}

// ---- field ----

funfield::ZElem parse_zelem(const std::string& text, long min_order) {
  funfield::ZElem out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ','))
    out.push_back(expr::parse_ratfunc(cur, min_order));
  if (out.empty()) out.push_back(expr::parse_ratfunc(text, min_order));
  return out;
}

int report_tower(const funfield::TowerBuild& build, const Options& opt) {
  const auto& T = build.algebra;
  bool pass = build.report.all_pass && build.modulus_holds;
  if (opt.format == "json") {
    json checks = json::array();
    for (const auto& c : build.report.checks)
      checks.push_back(json{{"name", c.name}, {"pass", c.pass}});
    json mod = json::array();
    for (const auto& c : build.modulus) mod.push_back(io::ratfunc_to_json(c));
    emit(json{{"tower", io::tower_spec_to_json(T.spec())},
              {"checks", checks},
              {"modulus_coefficients", mod},
              {"modulus_holds", build.modulus_holds},
              {"pass", pass}});
  } else {
    std::cout << "tower C(Y)[w]/(w^" << T.spec().t << " - f)[v]/(v^"
              << T.spec().m << " - g), f = " << T.spec().f.str() << "\n";
    for (const auto& c : build.report.checks)
      std::cout << "  " << c.name << ": " << (c.pass ? "ok" : "FAIL") << "\n";
    std::cout << "  defining relation vanishes: "
              << (build.modulus_holds ? "ok" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_field_t2(long m, long k, long r, const std::string& a_text,
                 const std::string& p_text, const std::string& f_text,
                 const Options& opt) {
  long min_order = exact::lcm_ll(m, 2);
  auto a = expr::parse_ratfunc(a_text, min_order);
  auto P = parse_zelem(p_text, min_order);
  std::optional<funfield::RatFunc> f;
  if (!f_text.empty()) f = expr::parse_ratfunc(f_text, min_order);
  auto build = funfield::t2_build(m, k, r, a, P, f);
  int rc = report_tower(build, opt);
  if (opt.format != "json") {
    auto probe = funfield::irreducibility_probe(build.modulus);
    std::cout << "  modulus probe: " << probe.verdict
              << (probe.root ? " (root " + probe.root->str() + ")" : "") << "\n";
  }
  return rc;
}

int cmd_field_dicyclic(long n, const std::string& c_text,
                       const std::string& d_text, const std::string& f_text,
                       const Options& opt) {
  long min_order = exact::lcm_ll(2 * n, 2);
  auto c = expr::parse_ratfunc(c_text, min_order);
  auto d = expr::parse_ratfunc(d_text, min_order);
  auto f = expr::parse_ratfunc(f_text, min_order);
  auto build = funfield::dicyclic_build(n, c, d, f);
  return report_tower(build, opt);
}

int cmd_field_verify(long m, long k, long t, long r, const std::string& f_text,
                     const std::string& g_text, const std::string& alpha_text,
                     const std::string& p_text, const Options& opt) {
  long min_order = exact::lcm_ll(m, t);
  funfield::TowerSpec spec;
  spec.m = m;
  spec.k = k;
  spec.t = t;
  spec.r = r;
  auto f = expr::parse_ratfunc(f_text, min_order);
  auto g = parse_zelem(g_text, min_order);
  long N = exact::lcm_ll(min_order, f.order());
  for (const auto& c : g) N = exact::lcm_ll(N, c.order());
  spec.N = N;
  spec.f = f.lifted(N);
  g.resize(t, funfield::RatFunc::zero(N));
  for (auto& c : g) c = c.lifted(N);
  spec.g = g;
  funfield::TowerAlgebra T(spec);
  auto sigma = T.define_sigma();
  funfield::TowerAuto tau;
  if (!alpha_text.empty()) {
    auto alpha = parse_zelem(alpha_text, N);
    for (auto& c : alpha) c = c.lifted(N);
    alpha.resize(t, funfield::RatFunc::zero(N));
    tau = T.define_tau_alpha(alpha);
  } else if (!p_text.empty()) {
    auto P = parse_zelem(p_text, N);
    for (auto& c : P) c = c.lifted(N);
    P.resize(t, funfield::RatFunc::zero(N));
    tau = T.define_tau_p(P);
  } else {
    throw CLI::ValidationError("field verify", "pass --tau-alpha or --tau-P");
  }
  auto rep = verify_group_action(T, sigma, tau,
                                 groups::MetacyclicParams{m, k, t, r});
  bool alpha_ok = false, norm_ok = false, p_ok = false;
  long u = 0;
  std::string alpha_str, p_str;
  if (rep.all_pass) {
    auto alpha = funfield::alpha_of(T, tau);
    alpha_str = alpha.str();
    alpha_ok = true;
    norm_ok = funfield::norm_alpha_identity(T, tau, alpha);
    auto pd = funfield::p_power_descent(T, tau);
    p_str = pd.P.str();
    u = pd.u;
    p_ok = true;
  }
  bool pass = rep.all_pass && alpha_ok && norm_ok && p_ok;
  if (opt.format == "json") {
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back(json{{"name", c.name}, {"pass", c.pass}});
    emit(json{{"tower", io::tower_spec_to_json(T.spec())},
              {"checks", checks},
              {"alpha", alpha_str},
              {"norm_identity", norm_ok},
              {"P", p_str},
              {"u", u},
              {"pass", pass}});
  } else {
    for (const auto& c : rep.checks)
      std::cout << c.name << ": " << (c.pass ? "ok" : "FAIL") << "\n";
    if (rep.all_pass) {
      std::cout << "alpha = " << alpha_str << " (sigma-invariant)\n";
      std::cout << "N(alpha) g^c = zeta_m^k: " << (norm_ok ? "ok" : "FAIL")
                << "\n";
      std::cout << "P = " << p_str << ", least u with P^u in C(Y): " << u
                << "\n";
    }
  }
  return pass ? 0 : 1;
}

// ---- kummer ----

int cmd_kummer(const json& input, const Options& opt) {
  auto in = io::kummer_from_json(input);
  auto invariants = abchars::kummer_subgroup(in.elements, in.n);
  if (opt.format == "json") {
    emit(json{{"n", in.n}, {"invariant_factors", invariants}});
  } else {
    if (invariants.empty()) {
      std::cout << "Delta is trivial\n";
    } else {
      std::cout << "Delta = ";
      for (size_t i = 0; i < invariants.size(); ++i)
        std::cout << (i ? " x " : "") << "Z/" << invariants[i];
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for metacyclic/metabelian Galois cover data"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--approx", opt.approx,
               "append approximate complex values to displayed cyclotomics");

  groups::MetacyclicParams p1, p2;
  long m = 1, r = 1, n = 1;
  std::string input_path, a_text, p_text("1"), f_text, c_text, d_text, g_text,
      alpha_text;

  auto add_params = [&](CLI::App* cmd, groups::MetacyclicParams& p) {
    cmd->add_option("--m", p.m, "sigma order m")->required();
    cmd->add_option("--k", p.k, "k with sigma^k = tau^t")->required();
    cmd->add_option("--t", p.t, "t with tau^t in <sigma>")->required();
    cmd->add_option("--r", p.r, "twist r in sigma tau = tau sigma^r")->required();
  };

  auto* group = app.add_subcommand("group", "presentation validation and tools");
  group->require_subcommand(1);
  auto* ginfo = group->add_subcommand("info", "validate and describe G_{m,k,t,r}");
  add_params(ginfo, p1);
  auto* giso = group->add_subcommand("iso", "exhaustive isomorphism check");
  add_params(giso, p1);
  giso->add_option("--m2", p2.m)->required();
  giso->add_option("--k2", p2.k)->required();
  giso->add_option("--t2", p2.t)->required();
  giso->add_option("--r2", p2.r)->required();

  auto* repsc = app.add_subcommand("reps", "irreducible representations");
  repsc->require_subcommand(1);
  auto* rlist = repsc->add_subcommand("list", "classified irreps with dimensions");
  add_params(rlist, p1);
  auto* rtable = repsc->add_subcommand("table", "exact character table");
  add_params(rtable, p1);

  auto* orb = app.add_subcommand("orbits", "orbits of zeta -> zeta^r on U_m");
  orb->add_option("--m", m)->required();
  orb->add_option("--r", r)->required();

  auto* dec = app.add_subcommand("decompose", "eigensheaf block plan for pi_* O_X");
  add_params(dec, p1);

  auto* cor = app.add_subcommand("corollary", "prime-t orbit counts b and h");
  add_params(cor, p1);

  auto* ab = app.add_subcommand("abelian", "abelian cover building data");
  ab->require_subcommand(1);
  auto* abcheck = ab->add_subcommand("check", "verify the fundamental relations");
  abcheck->add_option("--input", input_path, "building data JSON")->required();
  auto* abcomplete = ab->add_subcommand("complete", "complete reduced building data");
  abcomplete->add_option("--input", input_path, "reduced data JSON")->required();
  auto* abeq = ab->add_subcommand("equations", "emit the cover equations");
  abeq->add_option("--input", input_path, "building data JSON")->required();
  auto* abcan = ab->add_subcommand("canonical", "canonical-class bookkeeping");
  abcan->add_option("--input", input_path, "reduced data JSON with K_W")->required();

  auto* mb = app.add_subcommand("metabelian", "metabelian presentations and cover data");
  mb->require_subcommand(1);
  auto* mbcheck = mb->add_subcommand("check", "validate presentation (and cover data)");
  mbcheck->add_option("--input", input_path, "presentation or cover-data JSON")
      ->required();

  auto* field = app.add_subcommand("field", "function-field towers");
  field->require_subcommand(1);
  auto* ft2 = field->add_subcommand("t2", "t = 2 tower x^{2m} - 2a x^m + P^m");
  ft2->add_option("--m", p1.m)->required();
  ft2->add_option("--k", p1.k)->required();
  ft2->add_option("--r", p1.r)->required();
  ft2->add_option("--a", a_text, "a in C(Y)")->required();
  ft2->add_option("--P", p_text, "P in C(Z): comma-separated w-coefficients");
  ft2->add_option("--f", f_text, "explicit f (required when P has a w part)");
  auto* fdic = field->add_subcommand("dicyclic", "G_{2n,n,2,-1} tower");
  fdic->add_option("--n", n)->required();
  fdic->add_option("--c", c_text, "c in C(Y)")->required();
  fdic->add_option("--d", d_text, "d in C(Y)")->required();
  fdic->add_option("--f", f_text, "f in C(Y) with f^n = c^2 - d^2 f")->required();
  std::string ver_p_text;
  auto* fver = field->add_subcommand("verify", "verify a general tower action");
  add_params(fver, p1);
  fver->add_option("--f", f_text, "w^t = f")->required();
  fver->add_option("--g", g_text, "v^m = g: comma-separated w-coefficients")
      ->required();
  fver->add_option("--tau-alpha", alpha_text, "tau(v) = alpha v^r, alpha in C(Z)");
  fver->add_option("--tau-P", ver_p_text, "tau(v) = P/v, P in C(Z)");

  auto* kum = app.add_subcommand("kummer", "Kummer subgroup invariants");
  kum->add_option("--input", input_path, "kummer JSON input")->required();

  // --format/--approx live on the root; let them appear after any subcommand
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
    cmd->fallthrough();
    for (auto* sub : cmd->get_subcommands({})) allow_fallthrough(sub);
  };
  allow_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (ginfo->parsed()) return cmd_group_info(p1, opt);
    if (giso->parsed()) return cmd_group_iso(p1, p2, opt);
    if (rlist->parsed()) return cmd_reps_list(p1, opt);
    if (rtable->parsed()) return cmd_reps_table(p1, opt);
    if (orb->parsed()) return cmd_orbits(m, r, opt);
    if (dec->parsed()) return cmd_decompose(p1, opt);
    if (cor->parsed()) return cmd_corollary(p1, opt);
    if (abcheck->parsed()) return cmd_abelian_check(load_json_file(input_path), opt);
    if (abcomplete->parsed())
      return cmd_abelian_complete(load_json_file(input_path), opt);
    if (abeq->parsed()) return cmd_abelian_equations(load_json_file(input_path), opt);
    if (abcan->parsed()) return cmd_abelian_canonical(load_json_file(input_path), opt);
    if (mbcheck->parsed())
      return cmd_metabelian_check(load_json_file(input_path), opt);
    if (ft2->parsed())
      return cmd_field_t2(p1.m, p1.k, p1.r, a_text, p_text, f_text, opt);
    if (fdic->parsed()) return cmd_field_dicyclic(n, c_text, d_text, f_text, opt);
    if (fver->parsed())
      return cmd_field_verify(p1.m, p1.k, p1.t, p1.r, f_text, g_text, alpha_text,
                              ver_p_text, opt);
    if (kum->parsed()) return cmd_kummer(load_json_file(input_path), opt);
  } catch (const expr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const io::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
