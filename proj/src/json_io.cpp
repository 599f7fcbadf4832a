#include "covers/json_io.hpp"

#include <sstream>

namespace covers::io {

using exact::Cyclotomic;
using exact::Rational;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw SchemaError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

long as_long(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw SchemaError(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::vector<long> long_vec(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<long> out;
  for (const auto& x : j) out.push_back(as_long(x, what));
  return out;
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(exact::Int(s));
    return Rational(exact::Int(s.substr(0, slash)),
                    exact::Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw SchemaError("malformed rational \"" + s + "\"");
  }
}

}  // namespace

json params_to_json(const groups::MetacyclicParams& p) {
  return json{{"m", p.m}, {"k", p.k}, {"t", p.t}, {"r", p.r}};
}

groups::MetacyclicParams params_from_json(const json& j) {
  groups::MetacyclicParams p;
  p.m = as_long(field(j, "m"), "m");
  p.k = as_long(field(j, "k"), "k");
  p.t = as_long(field(j, "t"), "t");
  p.r = as_long(field(j, "r"), "r");
  return p;
}

json metabelian_to_json(const groups::MetabelianPresentation& p) {
  json act = json::array();
  for (const auto& M : p.action) {
    json rows = json::array();
    for (const auto& row : M) rows.push_back(row);
    act.push_back(rows);
  }
  return json{{"sigma_orders", p.sigma_orders},
              {"tau_orders", p.tau_orders},
              {"action_matrices", act},
              {"k_vectors", p.kvec}};
}

groups::MetabelianPresentation metabelian_from_json(const json& j) {
  groups::MetabelianPresentation p;
  p.sigma_orders = long_vec(field(j, "sigma_orders"), "sigma_orders");
  p.tau_orders = long_vec(field(j, "tau_orders"), "tau_orders");
  const json& act = field(j, "action_matrices");
  if (!act.is_array()) throw SchemaError("action_matrices must be an array");
  for (const auto& M : act) {
    if (!M.is_array()) throw SchemaError("action matrix must be an array");
    std::vector<std::vector<long>> rows;
    for (const auto& row : M) rows.push_back(long_vec(row, "action matrix row"));
    p.action.push_back(std::move(rows));
  }
  const json& kv = field(j, "k_vectors");
  if (!kv.is_array()) throw SchemaError("k_vectors must be an array");
  for (const auto& v : kv) p.kvec.push_back(long_vec(v, "k_vector"));
  return p;
}

json group_to_json(const abchars::FiniteAbelianGroup& A) {
  return json{{"factors", A.factors}};
}

abchars::FiniteAbelianGroup group_from_json(const json& j) {
  abchars::FiniteAbelianGroup A;
  A.factors = long_vec(field(j, "factors"), "factors");
  for (long m : A.factors)
    if (m < 1) throw SchemaError("group factors must be positive");
  return A;
}

json char_to_json(const abchars::AbChar& chi) {
  return json{{"exponents", chi.exponents}};
}

abchars::AbChar char_from_json(const json& j) {
  abchars::AbChar chi;
  chi.exponents = long_vec(field(j, "exponents"), "exponents");
  return chi;
}

json kummer_to_json(const KummerInput& in) {
  json els = json::array();
  for (const auto& el : in.elements) {
    json pairs = json::array();
    for (const auto& [label, e] : el) pairs.push_back(json::array({label, e}));
    els.push_back(pairs);
  }
  return json{{"elements", els}, {"n", in.n}};
}

KummerInput kummer_from_json(const json& j) {
  KummerInput in;
  in.n = as_long(field(j, "n"), "n");
  const json& els = field(j, "elements");
  if (!els.is_array()) throw SchemaError("elements must be an array");
  for (const auto& el : els) {
    if (!el.is_array()) throw SchemaError("each element must be an array of [label, exponent] pairs");
    abchars::FactoredElement fe;
    for (const auto& pr : el) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string())
        throw SchemaError("factor must be a [label, exponent] pair");
      fe.emplace_back(pr[0].get<std::string>(), as_long(pr[1], "exponent"));
    }
    in.elements.push_back(std::move(fe));
  }
  return in;
}

namespace {

json picard_to_json(const pardini::PicardModel& pic) {
  return json{{"rank", pic.rank}, {"torsion", pic.torsion}};
}

pardini::PicardModel picard_from_json(const json& j) {
  pardini::PicardModel pic;
  pic.rank = as_long(field(j, "rank"), "rank");
  pic.torsion = long_vec(field(j, "torsion"), "torsion");
  if (pic.rank < 0) throw SchemaError("rank must be nonnegative");
  for (long t : pic.torsion)
    if (t < 1) throw SchemaError("torsion orders must be positive");
  return pic;
}

json labels_to_json(const std::vector<pardini::BranchLabel>& labels) {
  json out = json::array();
  for (const auto& lab : labels)
    out.push_back(json{{"class", lab.divisor_class.coords}, {"g", lab.g}});
  return out;
}

std::vector<pardini::BranchLabel> labels_from_json(
    const json& j, const abchars::FiniteAbelianGroup& A,
    const pardini::PicardModel& pic) {
  if (!j.is_array()) throw SchemaError("labels must be an array");
  std::vector<pardini::BranchLabel> labels;
  long idx = 1;
  for (const auto& item : j) {
    pardini::PicClass cls{long_vec(field(item, "class"), "label class")};
    if ((long)cls.coords.size() != pic.dim())
      throw SchemaError("label class has wrong dimension");
    auto g = long_vec(field(item, "g"), "label g");
    if (g.size() != A.factors.size())
      throw SchemaError("label g has wrong length");
    labels.push_back(pardini::make_label(A, pardini::pic_reduce(pic, cls),
                                         std::move(g),
                                         "s" + std::to_string(idx)));
    ++idx;
  }
  return labels;
}

}  // namespace

json building_data_to_json(const pardini::BuildingData& bd) {
  json L = json::array();
  for (const auto& [chi, cls] : bd.L)
    L.push_back(json{{"chi", chi.exponents}, {"class", cls.coords}});
  return json{{"picard", picard_to_json(bd.pic)},
              {"group", group_to_json(bd.A)},
              {"labels", labels_to_json(bd.labels)},
              {"L", L}};
}

pardini::BuildingData building_data_from_json(const json& j) {
  pardini::BuildingData bd;
  bd.pic = picard_from_json(field(j, "picard"));
  bd.A = group_from_json(field(j, "group"));
  bd.labels = labels_from_json(field(j, "labels"), bd.A, bd.pic);
  const json& L = field(j, "L");
  if (!L.is_array()) throw SchemaError("L must be an array");
  for (const auto& item : L) {
    abchars::AbChar chi{long_vec(field(item, "chi"), "chi")};
    if (chi.exponents.size() != bd.A.factors.size())
      throw SchemaError("character exponent vector has wrong length");
    for (size_t u = 0; u < chi.exponents.size(); ++u)
      chi.exponents[u] = ((chi.exponents[u] % bd.A.factors[u]) +
                          bd.A.factors[u]) % bd.A.factors[u];
    pardini::PicClass cls{long_vec(field(item, "class"), "L class")};
    if ((long)cls.coords.size() != bd.pic.dim())
      throw SchemaError("L class has wrong dimension");
    bd.L[chi] = pardini::pic_reduce(bd.pic, cls);
  }
  if ((long)bd.L.size() != bd.A.order())
    throw SchemaError("L must assign a class to every character");
  auto triv = abchars::trivial_char(bd.A);
  if (!(bd.L.at(triv) == pardini::pic_zero(bd.pic)))
    throw SchemaError("L(trivial character) must be the zero class");
  return bd;
}

json reduced_data_to_json(const pardini::ReducedBuildingData& rbd,
                          const pardini::PicClass* K_W) {
  json L = json::array();
  for (size_t i = 0; i < rbd.gen_chars.size(); ++i)
    L.push_back(json{{"chi", rbd.gen_chars[i].exponents},
                     {"class", rbd.gen_classes[i].coords}});
  json out{{"picard", picard_to_json(rbd.pic)},
           {"group", group_to_json(rbd.A)},
           {"labels", labels_to_json(rbd.labels)},
           {"L", L}};
  if (K_W) out["K_W"] = K_W->coords;
  return out;
}

pardini::ReducedBuildingData reduced_data_from_json(const json& j) {
  pardini::ReducedBuildingData rbd;
  rbd.pic = picard_from_json(field(j, "picard"));
  rbd.A = group_from_json(field(j, "group"));
  rbd.labels = labels_from_json(field(j, "labels"), rbd.A, rbd.pic);
  const json& L = field(j, "L");
  if (!L.is_array() || L.empty())
    throw SchemaError("L must be a nonempty array of generator entries");
  for (const auto& item : L) {
    abchars::AbChar chi{long_vec(field(item, "chi"), "chi")};
    if (chi.exponents.size() != rbd.A.factors.size())
      throw SchemaError("character exponent vector has wrong length");
    for (size_t u = 0; u < chi.exponents.size(); ++u)
      chi.exponents[u] = ((chi.exponents[u] % rbd.A.factors[u]) +
                          rbd.A.factors[u]) % rbd.A.factors[u];
    pardini::PicClass cls{long_vec(field(item, "class"), "L class")};
    if ((long)cls.coords.size() != rbd.pic.dim())
      throw SchemaError("L class has wrong dimension");
    rbd.gen_chars.push_back(std::move(chi));
    rbd.gen_classes.push_back(pardini::pic_reduce(rbd.pic, cls));
  }
  return rbd;
}

std::optional<pardini::PicClass> k_w_from_json(const json& j) {
  if (!j.is_object() || !j.contains("K_W")) return std::nullopt;
  return pardini::PicClass{long_vec(j.at("K_W"), "K_W")};
}

json plan_to_json(const decomp::DecompPlan& plan) {
  json blocks = json::array();
  for (const auto& blk : plan.blocks) {
    json b;
    b["orbit_rep"] = blk.orbit.rep;
    b["orbit"] = blk.orbit.elements;
    if (blk.kind == decomp::Block::Kind::Full) {
      b["kind"] = "full";
      b["u_indices"] = blk.u_indices;
      b["theta"] = json{{"zeta_order", plan.params.m * plan.params.t},
                        {"exponent", blk.theta_exp}};
    } else {
      b["kind"] = "descends";
      json ker = json::array();
      for (const auto& e : blk.kernel) ker.push_back(json::array({e.a, e.b}));
      b["kernel"] = ker;
      b["quotient_order"] = blk.quotient_order;
    }
    blocks.push_back(std::move(b));
  }
  return json{{"params", params_to_json(plan.params)},
              {"nu", plan.nu},
              {"blocks", blocks}};
}

json cover_data_to_json(const decomp::MetabelianCoverData& data) {
  json scalars = json::array();
  for (const auto& row : data.scalars) {
    json r = json::array();
    for (const auto& [zo, ze] : row)
      r.push_back(json{{"zeta_order", zo}, {"exponent", ze}});
    scalars.push_back(std::move(r));
  }
  return json{{"presentation", metabelian_to_json(data.pres)},
              {"divisor_perms", data.divisor_perm},
              {"sheaf_perms", data.sheaf_perm},
              {"scalars", scalars}};
}

decomp::MetabelianCoverData cover_data_from_json(const json& j) {
  decomp::MetabelianCoverData data;
  data.pres = metabelian_from_json(field(j, "presentation"));
  const json& dp = field(j, "divisor_perms");
  if (!dp.is_array()) throw SchemaError("divisor_perms must be an array");
  for (const auto& p : dp) data.divisor_perm.push_back(long_vec(p, "divisor perm"));
  const json& sp = field(j, "sheaf_perms");
  if (!sp.is_array()) throw SchemaError("sheaf_perms must be an array");
  for (const auto& p : sp) data.sheaf_perm.push_back(long_vec(p, "sheaf perm"));
  const json& sc = field(j, "scalars");
  if (!sc.is_array()) throw SchemaError("scalars must be an array");
  for (const auto& row : sc) {
    if (!row.is_array()) throw SchemaError("scalar row must be an array");
    std::vector<std::pair<long, long>> r;
    for (const auto& s : row)
      r.emplace_back(as_long(field(s, "zeta_order"), "zeta_order"),
                     as_long(field(s, "exponent"), "exponent"));
    data.scalars.push_back(std::move(r));
  }
  return data;
}

json cyclotomic_to_json(const Cyclotomic& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(exact::rat_str(q));
  return json{{"order", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
  long order = as_long(field(j, "order"), "order");
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw SchemaError("coeffs must be an array");
  Cyclotomic out = Cyclotomic::zero(order);
  long deg = 0;
  for (const auto& c : coeffs) {
    if (!c.is_string()) throw SchemaError("cyclotomic coefficients are strings");
    Rational q = rational_from_string(c.get<std::string>());
    if (q != 0)
      out = out + q * Cyclotomic::root_of_unity(order, deg);
    ++deg;
  }
  return out;
}

json ratfunc_to_json(const funfield::RatFunc& f) {
  json num = json::array(), den = json::array();
  for (const auto& c : f.num().coeffs()) num.push_back(cyclotomic_to_json(c));
  for (const auto& c : f.den().coeffs()) den.push_back(cyclotomic_to_json(c));
  return json{{"order", f.order()}, {"num", num}, {"den", den}};
}

funfield::RatFunc ratfunc_from_json(const json& j) {
  long order = as_long(field(j, "order"), "order");
  auto poly_from = [&](const json& arr, const char* what) {
    if (!arr.is_array()) throw SchemaError(std::string(what) + " must be an array");
    std::vector<Cyclotomic> coeffs;
    for (const auto& c : arr) coeffs.push_back(cyclotomic_from_json(c).lifted(order));
    return funfield::CyPoly(order, std::move(coeffs));
  };
  return funfield::RatFunc(poly_from(field(j, "num"), "num"),
                           poly_from(field(j, "den"), "den"));
}

json tower_spec_to_json(const funfield::TowerSpec& spec) {
  json g = json::array();
  for (const auto& c : spec.g) g.push_back(ratfunc_to_json(c));
  return json{{"N", spec.N}, {"m", spec.m},       {"t", spec.t}, {"r", spec.r},
              {"k", spec.k}, {"f", ratfunc_to_json(spec.f)}, {"g", g}};
}

funfield::TowerSpec tower_spec_from_json(const json& j) {
  funfield::TowerSpec spec;
  spec.N = as_long(field(j, "N"), "N");
  spec.m = as_long(field(j, "m"), "m");
  spec.t = as_long(field(j, "t"), "t");
  spec.r = as_long(field(j, "r"), "r");
  spec.k = as_long(field(j, "k"), "k");
  spec.f = ratfunc_from_json(field(j, "f")).lifted(spec.N);
  const json& g = field(j, "g");
  if (!g.is_array()) throw SchemaError("g must be an array of rational functions");
  for (const auto& c : g) spec.g.push_back(ratfunc_from_json(c).lifted(spec.N));
  return spec;
}

json tower_element_to_json(const funfield::TowerElement& e) {
  json rows = json::array();
  for (long i = 0; i < e.vdim(); ++i) {
    json row = json::array();
    for (long j2 = 0; j2 < e.wdim(); ++j2)
      row.push_back(ratfunc_to_json(e.at(i, j2)));
    rows.push_back(std::move(row));
  }
  return json{{"coeffs", rows}};
}

json char_table_to_json(const groups::MetacyclicParams& p,
                        const reps::CharTable& table) {
  json classes = json::array();
  for (const auto& cls : table.classes) {
    json c = json::array();
    for (const auto& e : cls) c.push_back(json::array({e.a, e.b}));
    classes.push_back(std::move(c));
  }
  json rows = json::array();
  for (size_t i = 0; i < table.rows.size(); ++i) {
    const auto& ir = table.rows[i];
    json values = json::array();
    for (const auto& v : table.values[i]) values.push_back(v.str());
    rows.push_back(json{{"orbit_rep", ir.orbit.rep},
                        {"theta_exponent", ir.theta_exp},
                        {"dim", ir.dim},
                        {"values", values}});
  }
  return json{{"params", params_to_json(p)},
              {"classes", classes},
              {"irreps", rows}};
}

}  // namespace covers::io
