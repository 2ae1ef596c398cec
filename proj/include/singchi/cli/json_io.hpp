#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "singchi/cli/catalog.hpp"
#include "singchi/euler/euler_formulas.hpp"
#include "singchi/family/family.hpp"
#include "singchi/milnor/milnor.hpp"
#include "singchi/mps/multiple_points.hpp"

namespace singchi::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Reads a JSON document given inline (text starting with '{' or '[') or
/// as a file path. Throws BadInput.
Json load_json(const std::string& arg);

/// True when `arg` looks like inline JSON or names an existing file.
bool is_json_source(const std::string& arg);

/// {"n": 3, "components": [...], "vars": [...]}; vars default to x, y, z
/// for n = 3 and x, z for n = 2.
mps::MapGerm germ_from_json(const Json& j);

/// Germ JSON plus the parameter in "vars" and "unfolding": true. The
/// parameter is "t" unless "parameter" names another variable.
family::Unfolding unfolding_from_json(const Json& j);

/// {"vars": [...], "gens": [...]}
sb::IdealPresentation ideal_from_json(const Json& j);

/// [{"name": ..., "chi_pair": ..., "chi_tmf_reduced": ...}, ...]
std::vector<euler::StratumDatum> strata_from_json(const Json& j);

Json to_json(const poly::Polynomial& p);
Json to_json(const sb::IdealPresentation& ideal);
Json to_json(const milnor::Route& route);
Json to_json(const milnor::MilnorResult& r);
Json to_json(const mps::MapGerm& f);
Json to_json(const mps::InvariantTuple& t, bool with_routes = true);
Json to_json(const euler::StratumReport& s);
Json to_json(const euler::ImageChiReport& r);
Json to_json(const euler::ZariskiChi& z);
Json to_json(const euler::EquidimReport& e);
Json to_json(const family::FamilyVerdict& v);
Json to_json(const Instance& inst);
Json to_json(const Params& params);

}  // namespace singchi::cli
