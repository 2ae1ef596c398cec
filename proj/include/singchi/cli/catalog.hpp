#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "singchi/mps/multiple_points.hpp"

namespace singchi::cli {

using poly::Rational;

/// Parameter values by name: integer parameters k, j and moduli a, b, c.
using Params = std::map<std::string, Rational>;

struct Expected {
  std::int64_t mu_I = 0;
  std::int64_t minus_chi = 0;
};

/// Static description of one row of the germ table.
struct CatalogEntry {
  std::string name;
  std::vector<std::string> parameters;  // integer parameters the row needs
  std::string constraint;               // human-readable, e.g. "k >= 1"
  std::string template_text;            // components with symbolic parameters
  std::string expected_text;            // "mu_I = k, -chi = 3k-2"
  std::string note;                     // how the row departs from its usual listing, if at all
};

/// A catalog row instantiated at concrete parameters.
struct Instance {
  std::string name;
  Params params;  // only the parameters the row uses
  std::vector<std::string> components;
  mps::MapGerm germ;
  Expected expected;
  std::string note;
};

const std::vector<CatalogEntry>& catalog_entries();

bool has_entry(const std::string& name);

/// Instantiates a row. Parameters the row does not use are ignored; the
/// moduli a, b, c default to 2, 3, 5. Throws UnknownEntry or BadParams.
Instance catalog(const std::string& name, const Params& params = {});

/// Default moduli and the alternate set used for genericity checks.
Params default_moduli();
Params alternate_moduli();

/// A row together with its parameters, e.g. {"S_{j,k}", {j=1, k=2}}.
struct RowRef {
  std::string name;
  Params params;
};

/// Rows checked by the acceptance run: A_1..A_4, D_4, D_5, E_6, B_2, B_3,
/// C_3, F_4, P_1, P_2, Q_2, Q_3, R_3, S_{1,2}.
std::vector<RowRef> acceptance_rows();

/// Parses "NAME" or "NAME:k=3:j=1".
RowRef parse_row(const std::string& text);

/// Splits a comma-separated row list, ignoring commas inside braces.
std::vector<std::string> split_rows(const std::string& text);

std::string row_label(const RowRef& row);  // "A_k[k=2]"

}  // namespace singchi::cli
