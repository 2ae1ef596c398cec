#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "singchi/sb/standard_basis.hpp"

namespace singchi::milnor {

using poly::Polynomial;
using sb::IdealPresentation;

struct RouteStage {
  std::size_t index = 0;       // chain position i (ideal of the first i generators)
  std::size_t generators = 0;  // generators of the stage ideal
  sb::Colength colength = sb::Colength::finite(0);
};

/// How a Milnor number was obtained, kept for the JSON reports.
struct Route {
  std::string kind;  // "hypersurface", "empty", "smooth" or "lg_chain"
  std::uint64_t seed = 0;
  unsigned attempt = 0;                        // retries used before success
  std::vector<std::string> eliminated;         // "v = expr" substitutions
  std::vector<std::string> ring;               // variables after elimination
  std::vector<std::vector<std::int64_t>> combination;  // generator mixing matrix
  std::vector<RouteStage> stages;
};

struct MilnorResult {
  std::uint64_t mu = 0;
  Route route;
};

struct MilnorOptions {
  sb::EngineOptions engine;
  /// Remove generators of the form c*v + r(other variables) by substitution
  /// before running the chain. The local algebra is unchanged.
  bool eliminate_linear = true;
  unsigned max_attempts = 5;
};

/// mu(g) = dim O / (dg/dx_1, ..., dg/dx_n) in g's ring.
/// Throws NotAtOrigin when g(0) != 0 and NonIsolated when the colength is infinite.
MilnorResult hypersurface_milnor(const Polynomial& g, const MilnorOptions& options = {});

/// Milnor number of an isolated complete intersection by the Le-Greuel
/// chain mu(X_i) + mu(X_{i-1}) = dim O / ((f_1..f_{i-1}) + i x i minors of
/// d(f_1..f_i)), applied to seeded generic combinations of the generators.
/// The unit ideal (empty germ) has mu = 0. Throws NotICIS when every
/// attempt hits a stage of infinite colength.
MilnorResult icis_milnor(const IdealPresentation& ideal, std::uint64_t seed,
                         const MilnorOptions& options = {});

/// Cardinality of the Milnor fibre of a zero-dimensional ICIS, i.e. its
/// colength; 0 for the unit ideal. Throws NotZeroDimensional.
std::uint64_t point_count(const IdealPresentation& ideal, const MilnorOptions& options = {});

/// Mixing matrix used by icis_milnor for the given seed and attempt.
/// Seed 0, attempt 0 is the identity.
std::vector<std::vector<std::int64_t>> combination_matrix(std::size_t k, std::uint64_t seed,
                                                          unsigned attempt);

/// Result of removing linearly solvable variables from a presentation.
struct Elimination {
  IdealPresentation ideal;
  std::vector<std::string> substitutions;
  bool lost_generator = false;  // some generator became zero
};

Elimination eliminate_linear_variables(const IdealPresentation& ideal);

}  // namespace singchi::milnor
