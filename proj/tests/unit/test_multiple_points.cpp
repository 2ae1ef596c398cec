#include <string>
#include <vector>

#include "doctest.h"
#include "singchi/errors.hpp"
#include "singchi/mps/multiple_points.hpp"
#include "singchi/poly/parser.hpp"

using namespace singchi;
using namespace singchi::mps;

namespace {

MapGerm germ(const std::vector<std::string>& comps) {
  const Ring ring({"x", "y", "z"});
  std::vector<Polynomial> ps;
  for (const auto& c : comps) ps.push_back(poly::parse_poly(c, ring));
  return validate_corank1(ps, 3);
}

std::vector<Polynomial> parse_in(const Ring& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(poly::parse_poly(g, ring));
  return out;
}

const std::vector<std::string> kA1{"x", "y", "z^2", "z*(z^2 + x^2 + y^2)"};
const std::vector<std::string> kP1{"x", "y", "y*z + z^4", "x*z + z^3"};

}  // namespace

TEST_SUITE("multiple_points") {
  TEST_CASE("normal form validation") {
    CHECK(germ(kA1).n == 3);
    CHECK(germ(kA1).corank_var() == "z");
    const Ring xz({"x", "z"});
    CHECK(validate_corank1(parse_in(xz, {"x", "z^2", "x*z"}), 2).n == 2);  // cross-cap
    CHECK_THROWS_AS(germ({"x", "y", "z", "z^2"}), NotCorankOne);
    CHECK_THROWS_AS(germ({"y", "x", "z^2", "z^3"}), NotNormalForm);
    CHECK_THROWS_AS(germ({"x", "y", "z^2"}), NotNormalForm);
    CHECK_THROWS_AS(germ({"x", "y", "1 + z^2", "z^3"}), NotNormalForm);
  }

  TEST_CASE("partitions") {
    const Partition p({2, 1});
    CHECK(p.parts() == std::vector<unsigned>{1, 2});
    CHECK(p.k() == 3);
    CHECK(p.to_string() == "(1,2)");
    CHECK(Partition::ones(3) == Partition({1, 1, 1}));
  }

  TEST_CASE("double points of the cross-cap") {
    const Ring xz({"x", "z"});
    const MapGerm f = validate_corank1(parse_in(xz, {"x", "z^2", "x*z"}), 2);
    const auto I = dk_ideal(f, 2);
    CHECK(I.ring.vars() == std::vector<std::string>{"x", "z1", "z2"});
    CHECK(I.gens == parse_in(I.ring, {"z1 + z2", "x"}));
  }

  TEST_CASE("double and triple points of A1") {
    const MapGerm f = germ(kA1);
    CHECK(copy_variables(f, 3) == std::vector<std::string>{"z1", "z2", "z3"});
    const auto d2 = dk_ideal(f, 2);
    CHECK(d2.gens == parse_in(d2.ring, {"z1 + z2", "z1^2 + z1*z2 + z2^2 + x^2 + y^2"}));
    const auto d3 = dk_ideal(f, 3);
    CHECK(sb::is_unit_ideal(d3));
    CHECK(beta_k(f, 2) == 1);
    CHECK(beta_k(f, 3) == 0);
  }

  TEST_CASE("fixed points of a transposition") {
    const MapGerm f = germ(kA1);
    const auto h = dk_partition_ideal(f, 2, Partition({2}));
    CHECK(h.ring.vars() == std::vector<std::string>{"x", "y", "z1"});
    CHECK(h.gens == parse_in(h.ring, {"2*z1", "3*z1^2 + x^2 + y^2"}));
    const auto all = dk_partition_ideal(f, 2, Partition({1, 1}));
    CHECK(all.gens == dk_ideal(f, 2).gens);
    CHECK_THROWS(dk_partition_ideal(f, 3, Partition({2})));
  }

  TEST_CASE("triple points exist for P1") {
    const MapGerm f = germ(kP1);
    CHECK(beta_k(f, 2) == 1);
    CHECK(beta_k(f, 3) == 1);
  }

  TEST_CASE("invariant tuple of A1") {
    const auto t = invariant_tuple(germ(kA1), 1);
    CHECK(t.mu_d2 == 1);
    CHECK(t.mu_d2H == 1);
    CHECK(t.mu_d3 == 0);
    CHECK(t.mu_d3H1 == 0);
    CHECK(t.beta2 == 1);
    CHECK(t.beta3 == 0);
    CHECK(t.beta4 == 0);
    CHECK(t.Q == 0);
    CHECK(t.d4_points == 0);
  }

  TEST_CASE("invariant tuple is seed independent") {
    const MapGerm f = germ(kP1);
    const auto a = invariant_tuple(f, 1);
    CHECK(a == invariant_tuple(f, 2));
    CHECK(a == invariant_tuple(f, 12345));
    CHECK(a.d4_points == 24 * a.Q);
    CHECK(a.beta4 == (a.d4_points > 0 ? 1 : 0));
  }
}
