#include <doctest.h>

#include "properties.hpp"

using namespace singchi::props;

namespace {

constexpr std::uint64_t kSeed = 20240601;

void require(const Outcome& o) {
  INFO(o.name);
  INFO("checked " << o.cases << ", skipped " << o.skipped << ", failed " << o.failures);
  INFO("first failure: " << o.first_failure);
  CHECK(o.failures == 0);
  CHECK(o.cases >= kMinCases);
}

}  // namespace

TEST_SUITE("divided_differences") {
  TEST_CASE("symmetry") { require(dd_symmetry(kSeed)); }
  TEST_CASE("telescoping") { require(dd_telescoping(kSeed + 1)); }
  TEST_CASE("confluent rule") { require(dd_confluent(kSeed + 2)); }
  TEST_CASE("symmetric-function and Lagrange oracles") { require(dd_oracles(kSeed + 3)); }
}

TEST_SUITE("colength") {
  TEST_CASE("generator order, ordering and coordinate invariance") { require(colength_invariance(kSeed + 4)); }
  TEST_CASE("brute-force oracle on random ideals") { require(colength_oracle(kSeed + 5)); }
  TEST_CASE("brute-force oracle on the fixed corpus") {
    const Outcome o = corpus_oracle();
    INFO(o.first_failure);
    CHECK(o.failures == 0);
    CHECK(o.cases == colength_corpus().size());
  }
}

TEST_SUITE("milnor") {
  TEST_CASE("mu + 1 = point count") { require(icis_point_count(kSeed + 6)); }
  TEST_CASE("Le-Greuel seed independence") { require(lg_seed_independence(kSeed + 7)); }
  TEST_CASE("hypersurface routes agree") { require(hypersurface_consistency(kSeed + 8)); }
  TEST_CASE("linear elimination is harmless") { require(elimination_invariance(kSeed + 9)); }
}
