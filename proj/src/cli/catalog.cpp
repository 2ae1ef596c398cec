#include "singchi/cli/catalog.hpp"

#include <algorithm>
#include <functional>

#include "singchi/errors.hpp"
#include "singchi/poly/parser.hpp"

namespace singchi::cli {

namespace {

struct Values {
  std::int64_t k = 0;
  std::int64_t j = 0;
  std::string a, b, c;  // moduli as parenthesised literals
};

std::string s(std::int64_t v) { return std::to_string(v); }

struct Row {
  CatalogEntry entry;
  std::function<std::string(const Values&)> check;  // error message or ""
  std::function<std::vector<std::string>(const Values&)> components;
  std::function<Expected(const Values&)> expected;
};

std::function<std::string(const Values&)> k_at_least(std::int64_t lo) {
  return [lo](const Values& v) { return v.k >= lo ? std::string() : "requires k >= " + s(lo); };
}

std::function<std::string(const Values&)> no_check() {
  return [](const Values&) { return std::string(); };
}

std::function<Expected(const Values&)> fixed(std::int64_t mu, std::int64_t chi) {
  return [mu, chi](const Values&) { return Expected{mu, chi}; };
}

Row simple(std::string name, std::string p, std::string q, std::int64_t mu, std::int64_t chi) {
  std::string tmpl = "(x, y, " + p + ", " + q + ")";
  return Row{{std::move(name), {}, "", tmpl, "mu_I = " + s(mu) + ", -chi = " + s(chi), ""},
             no_check(),
             [p, q](const Values&) { return std::vector<std::string>{"x", "y", p, q}; },
             fixed(mu, chi)};
}

std::vector<std::string> germ(std::string p, std::string q) { return {"x", "y", std::move(p), std::move(q)}; }

const std::vector<Row>& rows() {
  static const std::vector<Row> table = [] {
    std::vector<Row> t;
    t.push_back({{"A_k", {"k"}, "k >= 1", "(x, y, z^2, z*(z^2+x^2+y^(k+1)))", "mu_I = k, -chi = 3k-2", ""},
                 k_at_least(1),
                 [](const Values& v) { return germ("z^2", "z*(z^2+x^2+y^" + s(v.k + 1) + ")"); },
                 [](const Values& v) { return Expected{v.k, 3 * v.k - 2}; }});
    t.push_back({{"D_k", {"k"}, "k >= 4", "(x, y, z^2, z*(z^2+x^2*y+y^(k-1)))", "mu_I = k, -chi = 3k-2", ""},
                 k_at_least(4),
                 [](const Values& v) { return germ("z^2", "z*(z^2+x^2*y+y^" + s(v.k - 1) + ")"); },
                 [](const Values& v) { return Expected{v.k, 3 * v.k - 2}; }});
    t.push_back(simple("E_6", "z^2", "z*(z^2+x^3+y^4)", 6, 16));
    t.push_back(simple("E_7", "z^2", "z*(z^2+x^3+x*y^3)", 7, 19));
    t.push_back(simple("E_8", "z^2", "z*(z^2+x^3+y^5)", 8, 22));
    t.push_back({{"B_k", {"k"}, "k >= 2", "(x, y, z^2, z*(x^2+y^2+z^(2k)))", "mu_I = k, -chi = 2k-1", ""},
                 k_at_least(2),
                 [](const Values& v) { return germ("z^2", "z*(x^2+y^2+z^" + s(2 * v.k) + ")"); },
                 [](const Values& v) { return Expected{v.k, 2 * v.k - 1}; }});
    t.push_back({{"C_k", {"k"}, "k >= 3", "(x, y, z^2, z*(x^2+y*z^2+y^k))", "mu_I = k, -chi = 3k-3", ""},
                 k_at_least(3),
                 [](const Values& v) { return germ("z^2", "z*(x^2+y*z^2+y^" + s(v.k) + ")"); },
                 [](const Values& v) { return Expected{v.k, 3 * v.k - 3}; }});
    t.push_back(simple("F_4", "z^2", "z*(x^2+y^3+z^4)", 4, 8));
    t.push_back(simple("P_1", "y*z+z^4", "x*z+z^3", 1, 3));
    t.push_back(simple("P_2", "y*z+z^5", "x*z+z^3", 2, 7));
    t.push_back({{"P_3^k", {"k"}, "k >= 2", "(x, y, y*z+z^6+z^(3k+2), x*z+z^3)", "mu_I = k+2, -chi = 3k+8", ""},
                 k_at_least(2),
                 [](const Values& v) { return germ("y*z+z^6+z^" + s(3 * v.k + 2), "x*z+z^3"); },
                 [](const Values& v) { return Expected{v.k + 2, 3 * v.k + 8}; }});
    {
      Row r = simple("P_4^1", "y*z+z^7+z^8", "x*z+z^3", 5, 18);
      r.entry.note =
          "listed with first component z, which is not a corank-1 normal form; x is used here";
      t.push_back(std::move(r));
    }
    t.push_back(simple("P_4", "y*z+z^7", "x*z+z^3", 5, 18));
    t.push_back({{"P_k", {"k"}, "k >= 1, k not a multiple of 3", "(x, y, y*z+z^(k+3), x*z+z^3)",
                  "mu_I = (k+1)(k+2)/6, -chi = (k^2+5k)/2", ""},
                 [](const Values& v) {
                   if (v.k < 1) return std::string("requires k >= 1");
                   if (v.k % 3 == 0) return std::string("requires k not divisible by 3");
                   return std::string();
                 },
                 [](const Values& v) { return germ("y*z+z^" + s(v.k + 3), "x*z+z^3"); },
                 [](const Values& v) {
                   return Expected{(v.k + 1) * (v.k + 2) / 6, (v.k * v.k + 5 * v.k) / 2};
                 }});
    t.push_back({{"Q_k", {"k"}, "k >= 2", "(x, y, x*z+y*z^2, z^3+y^k*z)", "mu_I = k, -chi = 3k", ""},
                 k_at_least(2),
                 [](const Values& v) { return germ("x*z+y*z^2", "z^3+y^" + s(v.k) + "*z"); },
                 [](const Values& v) { return Expected{v.k, 3 * v.k}; }});
    t.push_back({{"R_k", {"k"}, "k >= 3", "(x, y, x*z+z^3, y*z^2+z^4+z^(2k-1))", "mu_I = k+1, -chi = 2k+6", ""},
                 k_at_least(3),
                 [](const Values& v) { return germ("x*z+z^3", "y*z^2+z^4+z^" + s(2 * v.k - 1)); },
                 [](const Values& v) { return Expected{v.k + 1, 2 * v.k + 6}; }});
    t.push_back({{"S_{j,k}", {"j", "k"}, "j >= 1, k >= 2", "(x, y, x*z+y^2*z^2+z^(3j+2), z^3+y^k*z)",
                  "mu_I = k+j+1, -chi = 3(k+j)+5", ""},
                 [](const Values& v) {
                   if (v.j < 1) return std::string("requires j >= 1");
                   if (v.k < 2) return std::string("requires k >= 2");
                   return std::string();
                 },
                 [](const Values& v) { return germ("x*z+y^2*z^2+z^" + s(3 * v.j + 2), "z^3+y^" + s(v.k) + "*z"); },
                 [](const Values& v) { return Expected{v.k + v.j + 1, 3 * (v.k + v.j) + 5}; }});

    auto moduli_row = [&](std::string name, std::string p_tmpl, std::string q_tmpl,
                          std::function<std::vector<std::string>(const Values&)> make, std::int64_t mu,
                          std::int64_t chi) {
      t.push_back({{std::move(name), {}, "", "(x, y, " + p_tmpl + ", " + q_tmpl + ")",
                    "mu_I = " + s(mu) + ", -chi = " + s(chi), ""},
                   no_check(), std::move(make), fixed(mu, chi)});
    };
    moduli_row("I", "y*z+x*z^3+z^5+a*z^7", "x*z+z^4+b*z^6",
               [](const Values& v) { return germ("y*z+x*z^3+z^5+" + v.a + "*z^7", "x*z+z^4+" + v.b + "*z^6"); },
               6, 19);
    moduli_row("II", "y*z+x*z^3+a*z^6+z^7+b*z^8+c*z^9", "x*z+z^4",
               [](const Values& v) {
                 return germ("y*z+x*z^3+" + v.a + "*z^6+z^7+" + v.b + "*z^8+" + v.c + "*z^9", "x*z+z^4");
               },
               9, 30);
    moduli_row("III", "y*z+z^5+z^6+a*z^7", "x*z+z^4",
               [](const Values& v) { return germ("y*z+z^5+z^6+" + v.a + "*z^7", "x*z+z^4"); }, 6, 19);
    moduli_row("IV", "y*z+z^5+a*z^7", "x*z+z^4+z^6",
               [](const Values& v) { return germ("y*z+z^5+" + v.a + "*z^7", "x*z+z^4+z^6"); }, 6, 19);
    moduli_row("V", "x*z+z^5+a*y^3*z^2+y^4*z^2", "z^3+y^2*z",
               [](const Values& v) { return germ("x*z+z^5+" + v.a + "*y^3*z^2+y^4*z^2", "z^3+y^2*z"); },
               6, 22);
    moduli_row("VI", "x*z+z^3", "y*z^2+z^5+z^6+a*z^7",
               [](const Values& v) { return germ("x*z+z^3", "y*z^2+z^5+z^6+" + v.a + "*z^7"); }, 6, 19);
    moduli_row("VII", "x*z+z^3", "y^2*z+x*z^2+a*z^4+z^5",
               [](const Values& v) { return germ("x*z+z^3", "y^2*z+x*z^2+" + v.a + "*z^4+z^5"); }, 6, 19);
    moduli_row("VIII", "x*z+z^4+a*z^6+b*z^7", "y*z^2+z^4+z^5",
               [](const Values& v) {
                 return germ("x*z+z^4+" + v.a + "*z^6+" + v.b + "*z^7", "y*z^2+z^4+z^5");
               },
               8, 24);
    return t;
  }();
  return table;
}

const Row& find_row(const std::string& name) {
  for (const auto& r : rows()) {
    if (r.entry.name == name) return r;
  }
  throw UnknownEntry("no catalog entry named '" + name + "'");
}

std::int64_t integer_param(const Params& params, const std::string& entry, const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end()) throw BadParams(entry + " requires parameter " + name);
  if (!poly::is_integer(it->second)) throw BadParams("parameter " + name + " must be an integer");
  return poly::to_int64(it->second);
}

std::string modulus(const Params& params, const std::string& name, const Params& defaults) {
  const auto it = params.find(name);
  const Rational& v = it != params.end() ? it->second : defaults.at(name);
  return "(" + poly::to_string(v) + ")";
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& r : rows()) out.push_back(r.entry);
    return out;
  }();
  return entries;
}

bool has_entry(const std::string& name) {
  const auto& e = catalog_entries();
  return std::any_of(e.begin(), e.end(), [&](const CatalogEntry& c) { return c.name == name; });
}

Params default_moduli() { return {{"a", Rational(2)}, {"b", Rational(3)}, {"c", Rational(5)}}; }
Params alternate_moduli() { return {{"a", Rational(7)}, {"b", Rational(11)}, {"c", Rational(13)}}; }

Instance catalog(const std::string& name, const Params& params) {
  for (const auto& [key, value] : params) {
    if (key != "k" && key != "j" && key != "a" && key != "b" && key != "c") {
      throw BadParams("unknown parameter '" + key + "'");
    }
  }
  const Row& row = find_row(name);
  Instance inst;
  inst.name = name;
  inst.note = row.entry.note;
  Values v;
  for (const auto& p : row.entry.parameters) {
    const std::int64_t value = integer_param(params, name, p);
    if (value > 1000) throw BadParams("parameter " + p + " is too large");
    (p == "k" ? v.k : v.j) = value;
    inst.params[p] = Rational(static_cast<long>(value));
  }
  if (const std::string err = row.check(v); !err.empty()) throw BadParams(name + " " + err);
  const bool uses_moduli = row.entry.template_text.find("a*") != std::string::npos;
  if (uses_moduli) {
    const Params defaults = default_moduli();
    v.a = modulus(params, "a", defaults);
    v.b = modulus(params, "b", defaults);
    v.c = modulus(params, "c", defaults);
    for (const char* m : {"a", "b", "c"}) {
      const bool used = row.entry.template_text.find(std::string(m) + "*z") != std::string::npos ||
                        row.entry.template_text.find(std::string(m) + "*y") != std::string::npos;
      if (!used) continue;
      const auto it = params.find(m);
      inst.params[m] = it != params.end() ? it->second : defaults.at(m);
    }
  }
  inst.components = row.components(v);
  const poly::Ring ring({"x", "y", "z"});
  std::vector<poly::Polynomial> polys;
  for (const auto& c : inst.components) polys.push_back(poly::parse_poly(c, ring));
  inst.germ = mps::validate_corank1(polys, 3);
  inst.expected = row.expected(v);
  return inst;
}

std::vector<RowRef> acceptance_rows() {
  auto k = [](std::int64_t v) { return Params{{"k", Rational(static_cast<long>(v))}}; };
  return {
      {"A_k", k(1)}, {"A_k", k(2)}, {"A_k", k(3)}, {"A_k", k(4)}, {"D_k", k(4)},
      {"D_k", k(5)}, {"E_6", {}},   {"B_k", k(2)}, {"B_k", k(3)}, {"C_k", k(3)},
      {"F_4", {}},   {"P_1", {}},   {"P_2", {}},   {"Q_k", k(2)}, {"Q_k", k(3)},
      {"R_k", k(3)}, {"S_{j,k}", {{"j", Rational(1)}, {"k", Rational(2)}}},
  };
}

RowRef parse_row(const std::string& text) {
  RowRef row;
  std::size_t pos = text.find(':');
  row.name = text.substr(0, pos);
  while (pos != std::string::npos) {
    const std::size_t next = text.find(':', pos + 1);
    const std::string item = text.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw BadParams("expected name=value in row '" + text + "'");
    try {
      row.params[item.substr(0, eq)] = poly::parse_rational(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw BadParams("bad value in row '" + text + "'");
    }
    pos = next;
  }
  return row;
}

std::vector<std::string> split_rows(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char ch : text) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else if (ch != ' ') {
      current += ch;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

std::string row_label(const RowRef& row) {
  std::string label = row.name;
  const auto& entry = find_row(row.name).entry;
  if (entry.parameters.empty()) return label;
  label += "[";
  bool first = true;
  for (const auto& p : entry.parameters) {
    const auto it = row.params.find(p);
    if (!first) label += ",";
    first = false;
    label += p + "=" + (it != row.params.end() ? poly::to_string(it->second) : std::string("?"));
  }
  return label + "]";
}

}  // namespace singchi::cli
