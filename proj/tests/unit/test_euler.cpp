#include <string>
#include <vector>

#include "doctest.h"
#include "singchi/errors.hpp"
#include "singchi/euler/euler_formulas.hpp"
#include "singchi/poly/parser.hpp"

using namespace singchi;
using namespace singchi::euler;

namespace {

mps::MapGerm germ(const std::vector<std::string>& comps) {
  const poly::Ring ring({"x", "y", "z"});
  std::vector<Polynomial> ps;
  for (const auto& c : comps) ps.push_back(poly::parse_poly(c, ring));
  return mps::validate_corank1(ps, 3);
}

InvariantTuple tuple(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d, int beta2, int beta3,
                     std::uint64_t q) {
  InvariantTuple t;
  t.mu_d2 = a;
  t.mu_d2H = b;
  t.mu_d3 = c;
  t.mu_d3H1 = d;
  t.beta2 = beta2;
  t.beta3 = beta3;
  t.Q = q;
  t.d4_points = 24 * q;
  t.beta4 = q > 0 ? 1 : 0;
  return t;
}

}  // namespace

TEST_SUITE("euler") {
  TEST_CASE("stratified difference is a weighted sum") {
    CHECK(stratified_euler_difference({}) == 0);
    CHECK(stratified_euler_difference({{"S", 3, -1}, {"T", 2, 1}}) == -1);
    CHECK(stratified_euler_difference({{"edge", 1, 0}}) == 0);
  }

  TEST_CASE("A1 tuple") {
    const auto t = tuple(1, 1, 0, 0, 1, 0, 0);
    CHECK(image_milnor_number(t) == 1);
    CHECK(chi_mf_image(t) == -1);
    const auto r = image_chi_report(t);
    CHECK(r.mu_I == 1);
    CHECK(r.chi_dis == 0);
    CHECK(r.chi_mf == -1);
    CHECK(r.chi_mf_stratified == r.chi_mf);
    CHECK(r.consistency);
    CHECK(chi_difference_3to4(t) == r.chi_mf - r.chi_dis);
  }

  TEST_CASE("strata of the A1 tuple") {
    const auto s = strata_chi(tuple(1, 1, 0, 0, 1, 0, 0));
    CHECK(s.chi_S1 == 0);
    CHECK(s.chi_S2 == 0);
    CHECK(s.chi_S1111 == 0);
    CHECK(s.chi_S12 == 0);
    CHECK(s.pair_S2 == s.chi_S2 - s.chi_S12);
    const auto strata = image_strata(s);
    CHECK(stratified_euler_difference(strata) == chi_difference_3to4(tuple(1, 1, 0, 0, 1, 0, 0)));
  }

  TEST_CASE("non-realisable tuples") {
    const auto t = tuple(1, 1, 1, 0, 1, 1, 0);
    CHECK_THROWS_AS(strata_chi(t), NonIntegralChi);
    CHECK_THROWS_AS(image_milnor_number(t), NonIntegralChi);
    CHECK_THROWS_AS(image_milnor_number(tuple(0, 0, 0, 0, 0, -3, 0)), NegativeMuI);
  }

  TEST_CASE("image of A_k germs") {
    for (int k = 1; k <= 3; ++k) {
      const auto r = image_chi(germ({"x", "y", "z^2", "z*(z^2 + x^2 + y^" + std::to_string(k + 1) + ")"}), 1);
      CHECK(r.mu_I == k);
      CHECK(-r.chi_mf == 3 * k - 2);
      CHECK(r.consistency);
    }
  }

  TEST_CASE("generalized Zariski examples") {
    const auto odd = zariski_chi(1, 2, 3, 2);
    CHECK(odd.chi_mf_f == -1);
    CHECK(odd.chi_special_fibre == 3);
    CHECK(odd.chi_mf_F == 4);
    REQUIRE(odd.odd_identity.has_value());
    CHECK(*odd.odd_identity);

    const auto even = zariski_chi(1, 2, 4, 2);
    CHECK(even.chi_mf_f == 3);
    CHECK(even.chi_special_fibre == 9);
    CHECK(even.chi_mf_F == 6);
    CHECK_FALSE(even.odd_identity.has_value());

    const auto flat = zariski_chi(0, 5, 5, 7);
    CHECK(flat.chi_special_fibre == 8);
    CHECK(flat.chi_mf_F == 8);

    CHECK_THROWS_AS(zariski_chi(-1, 0, 3, 0), BadParams);
    CHECK_THROWS_AS(zariski_chi(1, 0, 1, 0), BadParams);
  }

  TEST_CASE("equidimensional cusp germs") {
    const poly::Ring x({"x"});
    const auto a = equidim_example(poly::parse_poly("x", x), 2);
    CHECK(a.mu_phi == 0);
    CHECK(a.chi_mf_H_formula == -1);
    CHECK(a.agree);
    CHECK(a.discriminant_ok);

    const auto b = equidim_example(poly::parse_poly("x^2", x), 2);
    CHECK(b.mu_phi == 1);
    CHECK(b.chi_mf_H_formula == -4);
    CHECK(b.chi_mf_H_stratified == -4);

    const poly::Ring xy({"x", "y"});
    const auto c = equidim_example(poly::parse_poly("x^2 + y^2", xy), 3);
    CHECK(c.mu_phi == 1);
    CHECK(c.chi_dis == 2);
    CHECK(c.chi_edge == 0);
    CHECK(c.chi_mf_H_formula == 2);
    CHECK(c.agree);
    CHECK(c.discriminant_ok);
    CHECK(c.target_variable == "w");

    CHECK_THROWS_AS(equidim_example(poly::parse_poly("x^2", x), 3), BadParams);
    CHECK_THROWS_AS(equidim_example(poly::parse_poly("x^2*y^2", xy), 3), NonIsolated);
  }
}
