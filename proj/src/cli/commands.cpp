#include "singchi/cli/commands.hpp"

#include <CLI11.hpp>
#include <optional>

#include "singchi/cli/catalog.hpp"
#include "singchi/cli/json_io.hpp"
#include "singchi/errors.hpp"
#include "singchi/poly/parser.hpp"

namespace singchi::cli {

namespace {

struct Config {
  std::uint64_t seed = 1;
  std::uint64_t max_steps = sb::EngineOptions{}.max_steps;
  std::string field = "rational";
  bool json = false;
  bool pretty = false;

  std::string input;
  std::vector<std::string> params;
  std::string vars;
  unsigned k = 0;
  std::string partition;
  std::vector<std::string> rows;
  std::int64_t mu_g = 0, mu_f = 0, n = 0, mu_I_f = 0;
  std::string phi;
  std::string t_values;
};

bool is_usage_error(const Error& e) {
  const std::string& k = e.kind();
  return k == "BadInput" || k == "BadParams" || k == "UnknownEntry" || k == "SyntaxError" ||
         k == "UnknownVariable" || k == "BadPrime";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

Rational parse_value(const std::string& text, const std::string& what) {
  try {
    return poly::parse_rational(text);
  } catch (const std::exception&) {
    throw BadParams("bad " + what + " '" + text + "'");
  }
}

Params parse_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& item : items) {
    for (const auto& kv : split(item, ',')) {
      if (kv.empty()) continue;
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw BadParams("expected name=value, got '" + kv + "'");
      p[kv.substr(0, eq)] = parse_value(kv.substr(eq + 1), "parameter value");
    }
  }
  return p;
}

sb::FieldSpec parse_field(const std::string& text) {
  if (text == "rational") return sb::FieldSpec::rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19) {
      throw BadPrime("'" + digits + "' is not a prime");
    }
    return sb::FieldSpec::prime_field(std::stoull(digits));
  }
  throw BadInput("--field must be 'rational' or 'fp:PRIME'");
}

struct GermSource {
  mps::MapGerm germ;
  std::optional<Instance> instance;
  Json input;
};

GermSource resolve_germ(const std::string& arg, const Params& params) {
  if (is_json_source(arg)) {
    Json j = load_json(arg);
    return {germ_from_json(j), std::nullopt, j};
  }
  if (has_entry(arg)) {
    Instance inst = catalog(arg, params);
    return {inst.germ, inst, to_json(inst)};
  }
  throw UnknownEntry("'" + arg + "' is neither JSON, a readable file nor a catalog entry");
}

poly::Ring ring_for(const std::string& text, const std::string& vars_flag, std::size_t min_vars) {
  std::vector<std::string> vars;
  if (!vars_flag.empty()) {
    vars = split(vars_flag, ',');
  } else {
    vars = poly::scan_identifiers(text);
    for (const char* extra : {"x", "y", "u", "v", "s", "r"}) {
      if (vars.size() >= min_vars) break;
      if (std::find(vars.begin(), vars.end(), extra) == vars.end()) vars.push_back(extra);
    }
  }
  return poly::Ring(vars);
}

class Runner {
 public:
  Runner(const Config& c, std::ostream& err) : c_(c), err_(err) {
    options_.engine.max_steps = c.max_steps;
    options_.engine.field = parse_field(c.field);
  }

  const milnor::MilnorOptions& options() const { return options_; }

  int milnor(Json& report) {
    const poly::Ring ring = ring_for(c_.input, c_.vars, 0);
    const auto g = poly::parse_poly(c_.input, ring);
    report["inputs"] = Json{{"g", c_.input}, {"vars", ring.vars()}};
    report["result"] = to_json(milnor::hypersurface_milnor(g, options_));
    return kExitOk;
  }

  int icis(Json& report) {
    const Json j = load_json(c_.input);
    const auto ideal = ideal_from_json(j);
    report["inputs"] = j;
    report["result"] = to_json(milnor::icis_milnor(ideal, c_.seed, options_));
    return kExitOk;
  }

  int mps(Json& report) {
    const GermSource src = resolve_germ(c_.input, parse_params(c_.params));
    report["inputs"] = src.input;
    if (c_.k == 0) {
      if (!c_.partition.empty()) throw BadParams("--partition requires --k");
      report["result"] = to_json(mps::invariant_tuple(src.germ, c_.seed, options_));
      return kExitOk;
    }
    std::vector<unsigned> parts;
    if (c_.partition.empty()) {
      parts.assign(c_.k, 1);
    } else {
      std::string p = c_.partition;
      std::erase_if(p, [](char ch) { return ch == '(' || ch == ')'; });
      for (const auto& s : split(p, ',')) {
        const Rational v = parse_value(s, "partition part");
        if (!poly::is_integer(v) || v < 1 || v > 64) throw BadParams("partition parts must be integers in 1..64");
        parts.push_back(static_cast<unsigned>(poly::to_int64(v)));
      }
    }
    const mps::Partition P(parts);
    const auto ideal = mps::dk_partition_ideal(src.germ, c_.k, P);
    Json result{{"k", c_.k}, {"partition", P.to_string()}, {"ideal", to_json(ideal)}};
    result["empty"] = sb::is_unit_ideal(ideal, options_.engine);
    result["beta_k"] = mps::beta_k(src.germ, c_.k, options_.engine);
    result["milnor"] = to_json(milnor::icis_milnor(ideal, c_.seed, options_));
    report["result"] = result;
    return kExitOk;
  }

  int image_chi(Json& report) {
    const GermSource src = resolve_germ(c_.input, parse_params(c_.params));
    report["inputs"] = src.input;
    const auto r = euler::image_chi(src.germ, c_.seed, options_);
    report["result"] = to_json(r);
    if (src.instance) {
      const bool match = r.mu_I == src.instance->expected.mu_I && -r.chi_mf == src.instance->expected.minus_chi;
      report["matches_expected"] = match;
    }
    return kExitOk;
  }

  int table1(Json& report) {
    const Params global = parse_params(c_.params);
    std::vector<RowRef> rows;
    if (c_.rows.empty()) {
      rows = acceptance_rows();
    } else {
      for (const auto& item : c_.rows) {
        for (const auto& text : split_rows(item)) {
          RowRef row = parse_row(text);
          for (const auto& [k, v] : global) row.params.emplace(k, v);
          rows.push_back(std::move(row));
        }
      }
    }
    Json out = Json::array();
    bool all = true;
    for (const auto& row : rows) {
      const Instance inst = catalog(row.name, row.params);
      Json j{{"row", row_label(row)}, {"components", inst.components}};
      j["expected"] = Json{{"mu_I", inst.expected.mu_I}, {"minus_chi_mf", inst.expected.minus_chi}};
      try {
        const auto r = euler::image_chi(inst.germ, c_.seed, options_);
        const bool parity = (r.tuple.mu_d3 % 2) == (r.tuple.mu_d3H1 % 2);
        const bool match = r.mu_I == inst.expected.mu_I && -r.chi_mf == inst.expected.minus_chi;
        j["computed"] = Json{{"mu_I", r.mu_I}, {"minus_chi_mf", -r.chi_mf}};
        j["tuple"] = to_json(r.tuple, false);
        j["parity"] = parity;
        j["consistency"] = r.consistency;
        j["match"] = match;
        all = all && match && parity && r.consistency;
      } catch (const Error& e) {
        j["error"] = Json{{"kind", e.kind()}, {"message", e.what()}};
        j["match"] = false;
        all = false;
      }
      if (!inst.note.empty()) j["note"] = inst.note;
      out.push_back(j);
    }
    report["result"] = Json{{"rows", out}, {"all_match", all}};
    return all ? kExitOk : kExitComputation;
  }

  int zariski(Json& report) {
    report["inputs"] = Json{{"mu_g", c_.mu_g},
                            {"mu_f", c_.mu_f},
                            {"n", c_.n},
                            {"mu_I_f", c_.mu_I_f},
                            {"mu_I_f_provenance", "user-supplied"}};
    report["result"] = to_json(euler::zariski_chi(c_.mu_g, c_.mu_f, c_.n, c_.mu_I_f));
    return kExitOk;
  }

  int equidim(Json& report) {
    if (c_.n < 2 || c_.n > 17) throw BadParams("--n must be between 2 and 17");
    const auto wanted = static_cast<std::size_t>(c_.n - 1);
    const poly::Ring ring = ring_for(c_.phi, c_.vars, wanted);
    if (ring.size() != wanted) {
      throw BadParams("phi must be a polynomial in n-1 = " + std::to_string(wanted) + " variables, got " +
                      std::to_string(ring.size()));
    }
    const auto phi = poly::parse_poly(c_.phi, ring);
    report["inputs"] = Json{{"phi", c_.phi}, {"vars", ring.vars()}, {"n", c_.n}};
    const auto e = euler::equidim_example(phi, c_.n, options_);
    report["result"] = to_json(e);
    return e.agree && e.discriminant_ok ? kExitOk : kExitComputation;
  }

  int family(Json& report) {
    family::Unfolding F;
    if (is_json_source(c_.input)) {
      const Json j = load_json(c_.input);
      report["inputs"] = j;
      F = unfolding_from_json(j);
    } else if (has_entry(c_.input)) {
      const Instance inst = catalog(c_.input, parse_params(c_.params));
      report["inputs"] = Json{{"trivial_unfolding_of", to_json(inst)}};
      F = family::trivial_unfolding(inst.germ);
    } else {
      throw UnknownEntry("'" + c_.input + "' is neither JSON, a readable file nor a catalog entry");
    }
    std::vector<Rational> ts = family::default_samples();
    if (!c_.t_values.empty()) {
      ts.clear();
      for (const auto& s : split(c_.t_values, ',')) ts.push_back(parse_value(s, "parameter value"));
    }
    Json tj = Json::array();
    for (const auto& t : ts) tj.push_back(poly::to_string(t));
    report["t_values"] = tj;
    report["result"] = to_json(family::family_check(F, ts, c_.seed, options_));
    return kExitOk;
  }

  int strat_euler(Json& report) {
    const Json j = load_json(c_.input);
    report["inputs"] = j;
    report["result"] = Json{{"difference", euler::stratified_euler_difference(strata_from_json(j))}};
    return kExitOk;
  }

  int list_catalog(Json& report) {
    if (!c_.input.empty()) {
      report["result"] = to_json(catalog(c_.input, parse_params(c_.params)));
      return kExitOk;
    }
    Json out = Json::array();
    for (const auto& e : catalog_entries()) {
      Json j{{"name", e.name},
             {"parameters", e.parameters},
             {"constraint", e.constraint},
             {"germ", e.template_text},
             {"expected", e.expected_text}};
      if (!e.note.empty()) j["note"] = e.note;
      out.push_back(j);
    }
    report["result"] = out;
    return kExitOk;
  }

 private:
  const Config& c_;
  std::ostream& err_;
  milnor::MilnorOptions options_;
};

void emit(const Json& report, const Config& c, std::ostream& out) {
  out << (c.pretty ? report.dump(2) : report.dump()) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Euler characteristics of Milnor fibres of images of corank-1 map germs", "singchi"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--seed", c.seed, "seed for generic choices (default 1)");
  app.add_option("--max-steps", c.max_steps, "reduction step limit per standard basis");
  app.add_option("--field", c.field, "coefficient field: rational or fp:PRIME");
  app.add_flag("--json", c.json, "print the report as compact JSON (default)");
  app.add_flag("--pretty", c.pretty, "indent the JSON report");

  auto* milnor = app.add_subcommand("milnor", "Milnor number of a hypersurface germ");
  milnor->add_option("poly", c.input, "polynomial g with g(0) = 0")->required();
  milnor->add_option("--vars", c.vars, "comma-separated variables (default: those appearing)");

  auto* icis = app.add_subcommand("icis", "Milnor number of an ICIS by the Le-Greuel chain");
  icis->add_option("ideal", c.input, "JSON {\"vars\": [...], \"gens\": [...]} or file")->required();

  auto* mps = app.add_subcommand("mps", "multiple point spaces and their invariants");
  mps->add_option("germ", c.input, "germ JSON, file or catalog entry")->required();
  mps->add_option("--k", c.k, "multiple point order (omit for the full invariant tuple)");
  mps->add_option("--partition", c.partition, "partition of k, e.g. 2,1");
  mps->add_option("--param", c.params, "catalog parameter name=value");

  auto* image = app.add_subcommand(
      "image-chi", "image Milnor number and Euler characteristics (assumes an isolated instability at 0)");
  image->add_option("germ", c.input, "germ JSON, file or catalog entry")->required();
  image->add_option("--param", c.params, "catalog parameter name=value");

  auto* table = app.add_subcommand("table1", "check catalog rows against their expected values");
  table->add_option("--rows", c.rows, "rows NAME or NAME:k=3:j=1, comma-separated");
  table->add_option("--param", c.params, "parameter applied to every row, name=value");

  auto* zariski = app.add_subcommand("zariski", "Euler characteristics of a composed singularity");
  zariski->add_option("--mu-g", c.mu_g, "Milnor number of g")->required();
  zariski->add_option("--mu-f", c.mu_f, "Milnor number of the ICIS f")->required();
  zariski->add_option("--n", c.n, "source dimension")->required();
  zariski->add_option("--mu-I-f", c.mu_I_f, "image Milnor number of f (supplied by the user)")->required();

  auto* equidim = app.add_subcommand("equidim", "the germ (x, y^3 + phi(x) y) by two routes");
  equidim->add_option("--phi", c.phi, "polynomial phi in n-1 variables")->required();
  equidim->add_option("--n", c.n, "dimension n")->required();
  equidim->add_option("--vars", c.vars, "comma-separated variables of phi");

  auto* fam = app.add_subcommand("family", "constancy of invariants in a one-parameter unfolding");
  fam->add_option("unfolding", c.input, "unfolding JSON, file, or catalog entry (trivial unfolding)")->required();
  fam->add_option("--t", c.t_values, "parameter samples, comma-separated (default 0,1/3,-1,7/5)");
  fam->add_option("--param", c.params, "catalog parameter name=value");

  auto* strat = app.add_subcommand("strat-euler", "sum of stratum contributions to chi(GF) - chi(SF)");
  strat->add_option("strata", c.input, "JSON list of {name, chi_pair, chi_tmf_reduced} or file")->required();

  auto* cat = app.add_subcommand("catalog", "list catalog entries or instantiate one");
  cat->add_option("name", c.input, "entry name");
  cat->add_option("--param", c.params, "parameter name=value");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "singchi: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  Json report{{"schema", kSchemaVersion}, {"command", command}, {"seed", c.seed}, {"field", c.field}};
  try {
    Runner runner(c, err);
    if (runner.options().engine.field.is_prime_field()) {
      err << "singchi: computing modulo " << runner.options().engine.field.prime
          << "; results are probabilistic\n";
      report["probabilistic"] = true;
    }
    int code = kExitOk;
    if (command == "milnor") code = runner.milnor(report);
    else if (command == "icis") code = runner.icis(report);
    else if (command == "mps") code = runner.mps(report);
    else if (command == "image-chi") code = runner.image_chi(report);
    else if (command == "table1") code = runner.table1(report);
    else if (command == "zariski") code = runner.zariski(report);
    else if (command == "equidim") code = runner.equidim(report);
    else if (command == "family") code = runner.family(report);
    else if (command == "strat-euler") code = runner.strat_euler(report);
    else code = runner.list_catalog(report);
    emit(report, c, out);
    return code;
  } catch (const Error& e) {
    report["error"] = Json{{"kind", e.kind()}, {"message", e.what()}};
    emit(report, c, out);
    err << "singchi: " << e.kind() << ": " << e.what() << '\n';
    return is_usage_error(e) ? kExitUsage : kExitComputation;
  } catch (const std::exception& e) {
    report["error"] = Json{{"kind", "InternalError"}, {"message", e.what()}};
    emit(report, c, out);
    err << "singchi: " << e.what() << '\n';
    return kExitComputation;
  }
}

}  // namespace singchi::cli
