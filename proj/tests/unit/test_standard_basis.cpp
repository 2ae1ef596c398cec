#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "singchi/errors.hpp"
#include "singchi/poly/parser.hpp"
#include "singchi/sb/standard_basis.hpp"

using namespace singchi;
using namespace singchi::sb;

namespace {

IdealPresentation ideal(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
  const Ring ring(vars);
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(poly::parse_poly(g, ring));
  return IdealPresentation(ring, ps);
}

std::set<std::vector<std::uint32_t>> leading_monomials(const IdealPresentation& basis,
                                                       const LocalOrdering& ord = {}) {
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& g : basis.gens) out.insert(local_leading_monomial(g, ord).exponents());
  return out;
}

std::uint64_t finite(const IdealPresentation& I, const LocalOrdering& ord = {}, const EngineOptions& o = {}) {
  const Colength c = colength(I, ord, o);
  REQUIRE(c.is_finite());
  return c.value();
}

}  // namespace

TEST_SUITE("standard_basis") {
  TEST_CASE("local leading monomials prefer low degree") {
    const Ring r({"x", "y"});
    CHECK(local_leading_monomial(poly::parse_poly("x^2 + x^3", r)).exponents() ==
          std::vector<std::uint32_t>{2, 0});
    CHECK(local_leading_monomial(poly::parse_poly("y^5 + x*y", r)).exponents() ==
          std::vector<std::uint32_t>{1, 1});
    // Ties in degree: ds prefers the smaller power of the last variable.
    CHECK(local_leading_monomial(poly::parse_poly("x*y + y^2", r)).exponents() ==
          std::vector<std::uint32_t>{1, 1});
    CHECK(local_leading_monomial(poly::parse_poly("y^2 + x^2", r)).exponents() ==
          std::vector<std::uint32_t>{2, 0});
  }

  TEST_CASE("unit multiples are absorbed") {
    const auto basis = standard_basis(ideal({"x", "y"}, {"x^2 + x^3", "y"}));
    CHECK(leading_monomials(basis) == std::set<std::vector<std::uint32_t>>{{2, 0}, {0, 1}});
  }

  TEST_CASE("unit ideal has basis {1}") {
    const auto basis = standard_basis(ideal({"x"}, {"1 + x"}));
    REQUIRE(basis.gens.size() == 1);
    CHECK(basis.gens[0] == poly::parse_poly("1", basis.ring));
    CHECK(is_unit_ideal(ideal({"x"}, {"1 + x"})));
  }

  TEST_CASE("scaled coordinates") {
    const auto I = ideal({"x", "y"}, {"2*x", "2*y"});
    CHECK(leading_monomials(standard_basis(I)) == std::set<std::vector<std::uint32_t>>{{1, 0}, {0, 1}});
    CHECK(finite(I) == 1);
  }

  TEST_CASE("basis elements lie in the ideal and cover its leading terms") {
    // (x^2 + y^3, x*y): the local basis needs y^4 as well.
    const auto I = ideal({"x", "y"}, {"x^2 + y^3", "x*y"});
    const auto basis = standard_basis(I);
    CHECK(leading_monomials(basis) ==
          std::set<std::vector<std::uint32_t>>{{2, 0}, {1, 1}, {0, 4}});
    CHECK(finite(I) == 5);
  }

  TEST_CASE("colength of small ideals") {
    CHECK(finite(ideal({"x", "y"}, {"x", "y"})) == 1);
    CHECK(finite(ideal({"x", "y"}, {"x^3", "y^2"})) == 6);
    CHECK(finite(ideal({"x", "y"}, {"3*y^2 + x", "y"})) == 1);
    CHECK(finite(ideal({"x", "y"}, {"2*x*y", "x^2 + 3*y^2"})) == 4);
    CHECK(finite(ideal({"x", "y", "z"}, {"x^2", "y^3", "z^4"})) == 24);
    CHECK(finite(ideal({"x"}, {"1 + x"})) == 0);
  }

  TEST_CASE("infinite colength") {
    CHECK_FALSE(colength(ideal({"x", "y"}, {"x"})).is_finite());
    CHECK_FALSE(colength(ideal({"x", "y"}, {"x^2", "x*y"})).is_finite());
    CHECK_FALSE(colength(ideal({"x", "y", "z"}, {"x*y", "y*z", "x*z"})).is_finite());
    CHECK_FALSE(colength(ideal({"x", "y"}, {"x*y*(x + y)", "x^2*y + x*y^2"})).is_finite());
    CHECK(colength(ideal({"x", "y"}, {"x"})) == Colength::infinite());
  }

  TEST_CASE("Jacobian of y^3 + x*y agrees with the oracle") {
    const auto I = ideal({"x", "y"}, {"y", "3*y^2 + x"});
    const auto b = oracle::brute_colength(I, 40);
    REQUIRE(b.status == oracle::BruteColength::Status::Exact);
    CHECK(finite(I) == b.value);
  }

  TEST_CASE("unit test looks only at constant terms") {
    CHECK(is_unit_ideal(ideal({"x"}, {"1"})));
    CHECK_FALSE(is_unit_ideal(ideal({"x", "y"}, {"x", "y", "x^2 + y^2"})));
    CHECK(is_unit_ideal(ideal({"x", "z1"}, {"x", "1"})));
  }

  TEST_CASE("both orderings and reversed variables give the same colength") {
    const auto I = ideal({"x", "y", "z"}, {"x^2 + y*z", "y^2 + x*z^2", "z^3 + x*y"});
    const std::uint64_t base = finite(I);
    CHECK(finite(I, LocalOrdering{OrderingKind::NegDegLex, {}}) == base);
    CHECK(finite(I, LocalOrdering{OrderingKind::NegDegRevLex, {"z", "y", "x"}}) == base);
    const auto b = oracle::brute_colength(I, 60);
    REQUIRE(b.status == oracle::BruteColength::Status::Exact);
    CHECK(base == b.value);
  }

  TEST_CASE("prime field results agree on small ideals") {
    EngineOptions fp;
    fp.field = FieldSpec::prime_field(kGuidePrime);
    for (const auto& I : {ideal({"x", "y"}, {"x^3", "y^2"}), ideal({"x", "y"}, {"2*x*y", "x^2 + 3*y^2"}),
                          ideal({"x", "y"}, {"x^2 + y^3", "x*y"})}) {
      CHECK(colength(I, {}, fp) == colength(I));
    }
    CHECK_FALSE(colength(ideal({"x", "y"}, {"x^2", "x*y"}), {}, fp).is_finite());
  }

  TEST_CASE("field specifications") {
    CHECK_THROWS_AS(FieldSpec::prime_field(15), BadPrime);
    CHECK_THROWS_AS(FieldSpec::prime_field(std::uint64_t{1} << 62), BadPrime);
    CHECK(FieldSpec::prime_field(101).to_string() == "fp:101");
    CHECK(FieldSpec::rationals().to_string() == "rational");
    EngineOptions fp;
    fp.field = FieldSpec::prime_field(3);
    CHECK_THROWS_AS(colength(ideal({"x", "y"}, {"1/3*x", "y"}), {}, fp), BadPrime);
  }

  TEST_CASE("step limit") {
    EngineOptions tiny;
    tiny.max_steps = 2;
    CHECK_THROWS_AS(standard_basis(ideal({"x", "y"}, {"x^2 + y^3", "x*y + y^5", "y^4 + x^3"}), {}, tiny),
                    ResourceLimit);
  }

  TEST_CASE("linear changes") {
    const auto id = linear_change_matrix(3, 0);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) CHECK(id[i][j] == (i == j ? 1 : 0));
    }
    const auto I = ideal({"x", "y"}, {"x"});
    const auto moved = generic_linear_change(I, 7);
    CHECK(moved.gens[0].term_count() >= 1);
    CHECK(generic_linear_change(I, 0).gens[0] == I.gens[0]);
    CHECK(linear_change_matrix(2, 7) == linear_change_matrix(2, 7));

    const auto J = ideal({"x", "y"}, {"2*x", "2*y"});  // Jacobian of x^2 + y^2
    for (std::uint64_t seed : {1, 2, 3, 17}) CHECK(finite(generic_linear_change(J, seed)) == 1);
    const auto K = ideal({"x", "y"}, {"3*x^2", "2*y"});
    for (std::uint64_t seed : {1, 5, 9}) CHECK(finite(generic_linear_change(K, seed)) == 2);
  }
}
