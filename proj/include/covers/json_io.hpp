#pragma once

#include <json.hpp>

#include "covers/abchars.hpp"
#include "covers/decomp.hpp"
#include "covers/groups.hpp"
#include "covers/pardini.hpp"
#include "covers/reps.hpp"
#include "covers/tower.hpp"

namespace covers::io {

// insertion-ordered documents so one re-emission cycle is byte-identical
using json = nlohmann::ordered_json;

// JSON shape/schema violations; the CLI maps these to usage-level failures.
struct SchemaError : Error {
  explicit SchemaError(const std::string& what) : Error(what) {}
};

std::string dump(const json& j);

json params_to_json(const groups::MetacyclicParams& p);
groups::MetacyclicParams params_from_json(const json& j);

json metabelian_to_json(const groups::MetabelianPresentation& p);
groups::MetabelianPresentation metabelian_from_json(const json& j);

json group_to_json(const abchars::FiniteAbelianGroup& A);
abchars::FiniteAbelianGroup group_from_json(const json& j);

json char_to_json(const abchars::AbChar& chi);
abchars::AbChar char_from_json(const json& j);

struct KummerInput {
  std::vector<abchars::FactoredElement> elements;
  long n = 2;
};
json kummer_to_json(const KummerInput& in);
KummerInput kummer_from_json(const json& j);

json building_data_to_json(const pardini::BuildingData& bd);
pardini::BuildingData building_data_from_json(const json& j);

// same file shape; the L entries are the generator characters
json reduced_data_to_json(const pardini::ReducedBuildingData& rbd,
                          const pardini::PicClass* K_W = nullptr);
pardini::ReducedBuildingData reduced_data_from_json(const json& j);
// optional K_W vector from the same file
std::optional<pardini::PicClass> k_w_from_json(const json& j);

json plan_to_json(const decomp::DecompPlan& plan);

json cover_data_to_json(const decomp::MetabelianCoverData& data);
decomp::MetabelianCoverData cover_data_from_json(const json& j);

json cyclotomic_to_json(const exact::Cyclotomic& c);
exact::Cyclotomic cyclotomic_from_json(const json& j);

json ratfunc_to_json(const funfield::RatFunc& f);
funfield::RatFunc ratfunc_from_json(const json& j);

json tower_spec_to_json(const funfield::TowerSpec& spec);
funfield::TowerSpec tower_spec_from_json(const json& j);

json tower_element_to_json(const funfield::TowerElement& e);

json char_table_to_json(const groups::MetacyclicParams& p,
                        const reps::CharTable& table);

}  // namespace covers::io
