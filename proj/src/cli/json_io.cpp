#include "singchi/cli/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "singchi/errors.hpp"
#include "singchi/poly/parser.hpp"

namespace singchi::cli {

namespace {

bool looks_inline(const std::string& arg) {
  const auto pos = arg.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (arg[pos] == '{' || arg[pos] == '[');
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw BadInput(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::vector<std::string> string_list(const Json& j, const char* name) {
  const Json& arr = field(j, name);
  if (!arr.is_array()) throw BadInput(std::string("field \"") + name + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& e : arr) {
    if (!e.is_string()) throw BadInput(std::string("field \"") + name + "\" must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::size_t source_dim(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<std::int64_t>() < 1) throw BadInput("\"n\" must be a positive integer");
  return n.get<std::size_t>();
}

std::vector<poly::Polynomial> parse_all(const std::vector<std::string>& texts, const poly::Ring& ring) {
  std::vector<poly::Polynomial> out;
  for (const auto& t : texts) out.push_back(poly::parse_poly(t, ring));
  return out;
}

std::int64_t integer_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw BadInput(std::string("\"") + name + "\" must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

bool is_json_source(const std::string& arg) {
  if (looks_inline(arg)) return true;
  std::error_code ec;
  return std::filesystem::is_regular_file(arg, ec);
}

Json load_json(const std::string& arg) {
  std::string text = arg;
  if (!looks_inline(arg)) {
    std::ifstream in(arg);
    if (!in) throw BadInput("cannot read '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw BadInput(std::string("malformed JSON: ") + e.what());
  }
}

mps::MapGerm germ_from_json(const Json& j) {
  const std::size_t n = source_dim(j);
  std::vector<std::string> vars;
  if (j.contains("vars")) {
    vars = string_list(j, "vars");
  } else if (n == 3) {
    vars = {"x", "y", "z"};
  } else if (n == 2) {
    vars = {"x", "z"};
  } else {
    throw BadInput("\"vars\" is required unless n is 2 or 3");
  }
  const poly::Ring ring(vars);
  return mps::validate_corank1(parse_all(string_list(j, "components"), ring), n);
}

family::Unfolding unfolding_from_json(const Json& j) {
  const std::size_t n = source_dim(j);
  if (j.contains("unfolding") && !(j.at("unfolding").is_boolean() && j.at("unfolding").get<bool>())) {
    throw BadInput("\"unfolding\" must be true");
  }
  std::string parameter = "t";
  if (j.contains("parameter")) {
    if (!j.at("parameter").is_string()) throw BadInput("\"parameter\" must be a string");
    parameter = j.at("parameter").get<std::string>();
  }
  const poly::Ring ring(string_list(j, "vars"));
  return family::make_unfolding(parse_all(string_list(j, "components"), ring), n, parameter);
}

sb::IdealPresentation ideal_from_json(const Json& j) {
  const poly::Ring ring(string_list(j, "vars"));
  return sb::IdealPresentation(ring, parse_all(string_list(j, "gens"), ring));
}

std::vector<euler::StratumDatum> strata_from_json(const Json& j) {
  if (!j.is_array()) throw BadInput("strata must be a JSON array");
  std::vector<euler::StratumDatum> out;
  for (const auto& e : j) {
    euler::StratumDatum d;
    const Json& name = field(e, "name");
    if (!name.is_string()) throw BadInput("stratum \"name\" must be a string");
    d.name = name.get<std::string>();
    d.chi_pair = integer_field(e, "chi_pair");
    d.chi_tmf_reduced = integer_field(e, "chi_tmf_reduced");
    out.push_back(std::move(d));
  }
  return out;
}

Json to_json(const poly::Polynomial& p) { return poly::to_string(p); }

Json to_json(const sb::IdealPresentation& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.gens) gens.push_back(to_json(g));
  return Json{{"vars", ideal.ring.vars()}, {"gens", gens}};
}

Json to_json(const milnor::Route& route) {
  Json stages = Json::array();
  for (const auto& s : route.stages) {
    Json c = s.colength.is_finite() ? Json(s.colength.value()) : Json("infinite");
    stages.push_back(Json{{"index", s.index}, {"generators", s.generators}, {"colength", c}});
  }
  return Json{{"kind", route.kind},       {"seed", route.seed},
              {"attempt", route.attempt}, {"eliminated", route.eliminated},
              {"ring", route.ring},       {"combination", route.combination},
              {"stages", stages}};
}

Json to_json(const milnor::MilnorResult& r) { return Json{{"mu", r.mu}, {"route", to_json(r.route)}}; }

Json to_json(const mps::MapGerm& f) {
  Json comps = Json::array();
  for (const auto& c : f.components) comps.push_back(to_json(c));
  return Json{{"n", f.n}, {"vars", f.ring.vars()}, {"components", comps}};
}

Json to_json(const mps::InvariantTuple& t, bool with_routes) {
  Json j{{"mu_d2", t.mu_d2},   {"mu_d2H", t.mu_d2H}, {"mu_d3", t.mu_d3}, {"mu_d3H1", t.mu_d3H1},
         {"beta2", t.beta2},   {"beta3", t.beta3},   {"beta4", t.beta4}, {"Q", t.Q},
         {"d4_points", t.d4_points}};
  if (with_routes) {
    Json routes = Json::object();
    for (const auto& r : t.routes) routes[r.space] = to_json(r.result);
    j["routes"] = routes;
  }
  return j;
}

Json to_json(const euler::StratumReport& s) {
  return Json{{"closure", {{"S1", s.chi_S1},
                           {"S11", s.chi_S11},
                           {"S111", s.chi_S111},
                           {"S2", s.chi_S2},
                           {"S1111", s.chi_S1111},
                           {"S12", s.chi_S12}}},
              {"pair", {{"S11", s.pair_S11}, {"S111", s.pair_S111}, {"S2", s.pair_S2}}}};
}

Json to_json(const euler::ImageChiReport& r) {
  return Json{{"tuple", to_json(r.tuple)},
              {"mu_I", r.mu_I},
              {"chi_dis", r.chi_dis},
              {"chi_mf", r.chi_mf},
              {"minus_chi_mf", -r.chi_mf},
              {"chi_difference", r.chi_difference},
              {"chi_mf_stratified", r.chi_mf_stratified},
              {"strata", to_json(r.strata)},
              {"consistency", r.consistency},
              {"mu_I_k", nullptr},
              {"mu_k_g", nullptr},
              {"unavailable",
               "mu_I^k (Betti numbers of sections of the disentanglement) and mu^k(g) (complex links) "
               "have no effective algorithm here and are reported as null"}};
}

Json to_json(const euler::ZariskiChi& z) {
  Json j{{"chi_mf_F", z.chi_mf_F}, {"chi_special_fibre", z.chi_special_fibre}, {"chi_mf_f", z.chi_mf_f}};
  j["odd_identity"] = z.odd_identity ? Json(*z.odd_identity) : Json(nullptr);
  return j;
}

Json to_json(const euler::EquidimReport& e) {
  return Json{{"mu_phi", e.mu_phi},
              {"chi_dis", e.chi_dis},
              {"chi_edge", e.chi_edge},
              {"chi_mf_H_formula", e.chi_mf_H_formula},
              {"chi_mf_H_stratified", e.chi_mf_H_stratified},
              {"target_variable", e.target_variable},
              {"discriminant", to_json(e.discriminant)},
              {"discriminant_unit", poly::to_string(e.discriminant_unit)},
              {"discriminant_ok", e.discriminant_ok},
              {"agree", e.agree}};
}

Json to_json(const family::FamilyVerdict& v) {
  Json samples = Json::array();
  for (const auto& s : v.samples) {
    Json j{{"t", poly::to_string(s.t)}};
    if (s.tuple) {
      j["tuple"] = to_json(*s.tuple, false);
      j["mu_I"] = s.mu_I;
      j["chi_mf"] = s.chi_mf;
    } else {
      j["error"] = Json{{"kind", s.error_kind}, {"message", s.error}};
    }
    samples.push_back(j);
  }
  Json cert = Json::array();
  for (const auto& c : v.certificate) cert.push_back(Json{{"invariant", c.invariant}, {"values", c.values}});
  return Json{{"constant", v.constant}, {"scope", v.scope},   {"certificate", cert},
              {"failed", v.failed},     {"samples", samples}, {"caveats", v.caveats}};
}

Json to_json(const Params& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params) {
    if (poly::is_integer(v)) {
      j[k] = poly::to_int64(v);
    } else {
      j[k] = poly::to_string(v);
    }
  }
  return j;
}

Json to_json(const Instance& inst) {
  Json j{{"name", inst.name},
         {"params", to_json(inst.params)},
         {"components", inst.components},
         {"expected", {{"mu_I", inst.expected.mu_I}, {"minus_chi_mf", inst.expected.minus_chi}}}};
  if (!inst.note.empty()) j["note"] = inst.note;
  return j;
}

}  // namespace singchi::cli
