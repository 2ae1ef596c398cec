#include <set>
#include <string>

#include "doctest.h"
#include "singchi/cli/catalog.hpp"
#include "singchi/errors.hpp"

using namespace singchi;
using namespace singchi::cli;

namespace {

Params k(long value) { return {{"k", Rational(value)}}; }

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("expected values of parametrised rows") {
    const auto a2 = catalog("A_k", k(2));
    CHECK(a2.expected.mu_I == 2);
    CHECK(a2.expected.minus_chi == 4);
    CHECK(a2.components == std::vector<std::string>{"x", "y", "z^2", "z*(z^2+x^2+y^3)"});
    CHECK(catalog("D_k", k(5)).expected.minus_chi == 13);
    CHECK(catalog("B_k", k(3)).expected.minus_chi == 5);
    CHECK(catalog("C_k", k(3)).expected.minus_chi == 6);
    CHECK(catalog("Q_k", k(3)).expected.minus_chi == 9);
    CHECK(catalog("R_k", k(3)).expected.mu_I == 4);
    CHECK(catalog("R_k", k(3)).expected.minus_chi == 12);
    const auto s = catalog("S_{j,k}", {{"j", Rational(1)}, {"k", Rational(2)}});
    CHECK(s.expected.mu_I == 4);
    CHECK(s.expected.minus_chi == 14);
    CHECK(catalog("P_k", k(4)).expected.mu_I == 5);
    CHECK(catalog("P_k", k(4)).expected.minus_chi == 18);
  }

  TEST_CASE("fixed rows") {
    CHECK(catalog("E_6").expected.mu_I == 6);
    CHECK(catalog("E_6").expected.minus_chi == 16);
    CHECK(catalog("F_4").expected.minus_chi == 8);
    CHECK(catalog("P_1").expected.minus_chi == 3);
    CHECK(catalog("VIII").expected.mu_I == 8);
    CHECK_FALSE(catalog("P_4^1").note.empty());
  }

  TEST_CASE("moduli") {
    const auto d = catalog("I");
    CHECK(d.params.at("a") == 2);
    CHECK(d.params.at("b") == 3);
    CHECK(d.params.count("c") == 0);
    const auto alt = catalog("I", alternate_moduli());
    CHECK(alt.components[2] == "y*z+x*z^3+z^5+(7)*z^7");
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(catalog("Z_9"), UnknownEntry);
    CHECK_THROWS_AS(catalog("A_k"), BadParams);
    CHECK_THROWS_AS(catalog("A_k", k(0)), BadParams);
    CHECK_THROWS_AS(catalog("P_k", k(3)), BadParams);
    CHECK_THROWS_AS(catalog("A_k", {{"k", poly::make_rational(1, 2)}}), BadParams);
    CHECK_THROWS_AS(catalog("A_k", {{"k", Rational(1)}, {"m", Rational(1)}}), BadParams);
  }

  TEST_CASE("acceptance rows") {
    const auto rows = acceptance_rows();
    CHECK(rows.size() == 17);
    std::set<std::string> labels;
    for (const auto& r : rows) {
      CHECK(has_entry(r.name));
      labels.insert(row_label(r));
    }
    CHECK(labels.size() == 17);
    CHECK(labels.count("A_k[k=2]") == 1);
  }

  TEST_CASE("row syntax") {
    const auto r = parse_row("S_{j,k}:k=3:j=1");
    CHECK(r.name == "S_{j,k}");
    CHECK(r.params.at("k") == 3);
    CHECK(r.params.at("j") == 1);
    CHECK(split_rows("A_k,S_{j,k}:j=1:k=2,E_6") ==
          std::vector<std::string>{"A_k", "S_{j,k}:j=1:k=2", "E_6"});
    CHECK_THROWS_AS(parse_row("A_k:k"), BadParams);
  }
}
