#include "singchi/milnor/milnor.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "singchi/errors.hpp"
#include "singchi/poly/matrix.hpp"
#include "singchi/poly/operations.hpp"

namespace singchi::milnor {

using poly::Rational;
using poly::Ring;

namespace {

// Step budget of the modular runs that pick a combination.
constexpr std::uint64_t kProbeSteps = 200'000;

std::vector<std::string> ring_vars(const Ring& r) { return r.vars(); }

sb::Colength stage_colength(const Ring& ring, std::vector<Polynomial> gens,
                            const MilnorOptions& options) {
  std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
  return sb::colength(IdealPresentation(ring, std::move(gens)), sb::LocalOrdering{},
                      options.engine);
}

// Finds v, c, r with g = c*v + r, c a nonzero constant and r free of v.
bool solvable_variable(const Polynomial& g, std::size_t& var, Polynomial& solution) {
  const Ring& ring = g.ring();
  for (std::size_t v = 0; v < ring.size(); ++v) {
    if (g.degree_in(v) != 1) continue;
    const auto coeffs = g.coefficients_in(v);
    if (!coeffs[1].is_constant()) continue;
    const Rational c = coeffs[1].constant_term();
    solution = coeffs[0] * (Rational(-1) / c);
    var = v;
    return true;
  }
  return false;
}

}  // namespace

Elimination eliminate_linear_variables(const IdealPresentation& ideal) {
  Ring ring = ideal.ring;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens) {
    if (!g.is_zero()) gens.push_back(g);
  }
  Elimination out;
  for (;;) {
    bool progress = false;
    for (std::size_t gi = 0; gi < gens.size() && !progress; ++gi) {
      std::size_t var = 0;
      Polynomial solution;
      if (!solvable_variable(gens[gi], var, solution)) continue;
      const std::string name = ring.var(var);
      const Ring smaller = ring.without(name);
      out.substitutions.push_back(name + " = " + poly::to_string(solution));
      poly::VarAssignment assignment(smaller);
      assignment.set(name, solution.in_ring(smaller));
      std::vector<Polynomial> next;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j == gi) continue;
        Polynomial p = poly::substitute(gens[j], assignment);
        if (p.is_zero()) {
          out.lost_generator = true;
        } else {
          next.push_back(std::move(p));
        }
      }
      gens = std::move(next);
      ring = smaller;
      progress = true;
    }
    if (!progress) break;
  }
  out.ideal = IdealPresentation(ring, std::move(gens));
  return out;
}

MilnorResult hypersurface_milnor(const Polynomial& g, const MilnorOptions& options) {
  if (g.constant_term() != 0) throw NotAtOrigin("g(0) = " + poly::to_string(g.constant_term()));
  const Ring& ring = g.ring();
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < ring.size(); ++i) partials.push_back(g.derivative(i));
  const auto c = stage_colength(ring, partials, options);
  if (!c.is_finite()) throw NonIsolated(poly::to_string(g) + " has a non-isolated singularity");
  MilnorResult r;
  r.mu = c.value();
  r.route.kind = "hypersurface";
  r.route.ring = ring_vars(ring);
  r.route.stages.push_back(RouteStage{1, partials.size(), c});
  return r;
}

std::vector<std::vector<std::int64_t>> combination_matrix(std::size_t k, std::uint64_t seed,
                                                          unsigned attempt) {
  std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k, 0));
  if (seed == 0 && attempt == 0) {
    for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
    return m;
  }
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + attempt + 1);
  for (;;) {
    std::vector<std::vector<Rational>> q(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        m[i][j] = static_cast<std::int64_t>(rng() % 7) - 3;
        q[i][j] = Rational(static_cast<long>(m[i][j]));
      }
    }
    if (poly::determinant(q) != 0) return m;
  }
}

MilnorResult icis_milnor(const IdealPresentation& ideal, std::uint64_t seed,
                         const MilnorOptions& options) {
  MilnorResult result;
  result.route.seed = seed;
  if (sb::is_unit_ideal(ideal, options.engine)) {
    result.route.kind = "empty";
    return result;
  }

  IdealPresentation work = ideal;
  std::erase_if(work.gens, [](const Polynomial& p) { return p.is_zero(); });
  if (options.eliminate_linear) {
    Elimination e = eliminate_linear_variables(work);
    if (e.lost_generator) {
      throw NotICIS("presentation has more generators than its codimension");
    }
    result.route.eliminated = std::move(e.substitutions);
    work = std::move(e.ideal);
  }
  result.route.ring = ring_vars(work.ring);
  const Ring& ring = work.ring;
  const std::size_t k = work.gens.size();
  if (k == 0) {
    result.route.kind = "smooth";
    return result;
  }
  if (k > ring.size()) {
    throw NotICIS("more generators (" + std::to_string(k) + ") than variables (" +
                  std::to_string(ring.size()) + ")");
  }

  result.route.kind = "lg_chain";
  // Stage colengths of one attempt; nullopt when a stage is infinite.
  auto chain = [&](unsigned attempt, const MilnorOptions& opts) -> std::optional<std::vector<RouteStage>> {
    const auto mix = combination_matrix(k, seed, attempt);
    std::vector<Polynomial> f;
    for (std::size_t i = 0; i < k; ++i) {
      Polynomial comb(ring);
      for (std::size_t j = 0; j < k; ++j) {
        if (mix[i][j] != 0) comb += work.gens[j] * Rational(static_cast<long>(mix[i][j]));
      }
      f.push_back(std::move(comb));
    }
    std::vector<RouteStage> stages;
    for (std::size_t i = 1; i <= k; ++i) {
      const std::vector<Polynomial> head(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(i));
      std::vector<Polynomial> stage(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(i - 1));
      for (auto& minor : poly::maximal_minors(poly::jacobian(head, ring.vars()))) {
        stage.push_back(std::move(minor));
      }
      const std::size_t count = stage.size();
      const auto c = stage_colength(ring, std::move(stage), opts);
      if (!c.is_finite()) return std::nullopt;
      stages.push_back(RouteStage{i, count, c});
    }
    return stages;
  };
  // mu(X_k) = c_k - c_{k-1} + c_{k-2} - ..., accepted when non-negative.
  auto accept = [&](unsigned attempt, std::vector<RouteStage> stages) {
    std::int64_t mu = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const auto c = static_cast<std::int64_t>(stages[i].colength.value());
      mu += ((k - 1 - i) % 2 == 0) ? c : -c;
    }
    if (mu < 0) return false;
    result.mu = static_cast<std::uint64_t>(mu);
    result.route.attempt = attempt;
    result.route.combination = combination_matrix(k, seed, attempt);
    result.route.stages = std::move(stages);
    return true;
  };

  // Over Q a bad combination is expensive to recognise, since an infinite
  // colength needs a complete standard basis. Reduction mod p can only
  // lower ranks, so a stage of finite colength mod p has finite colength
  // over Q: attempts that pass mod p are run exactly first, and the others
  // only if none of those succeeds.
  std::vector<bool> tried(options.max_attempts, false);
  if (!options.engine.field.is_prime_field()) {
    MilnorOptions probe = options;
    probe.engine.field = sb::FieldSpec::prime_field(sb::kGuidePrime);
    probe.engine.max_steps = std::min<std::uint64_t>(options.engine.max_steps, kProbeSteps);
    for (unsigned attempt = 0; attempt < options.max_attempts; ++attempt) {
      bool passes = false;
      try {
        passes = chain(attempt, probe).has_value();
      } catch (const BadPrime&) {
      } catch (const ResourceLimit&) {
      }
      if (!passes) continue;
      tried[attempt] = true;
      if (auto stages = chain(attempt, options); stages && accept(attempt, std::move(*stages))) return result;
    }
  }
  for (unsigned attempt = 0; attempt < options.max_attempts; ++attempt) {
    if (tried[attempt]) continue;
    if (auto stages = chain(attempt, options); stages && accept(attempt, std::move(*stages))) return result;
  }
  throw NotICIS("Le-Greuel chain has a stage of infinite colength for " +
                std::to_string(options.max_attempts) + " generic choices");
}

std::uint64_t point_count(const IdealPresentation& ideal, const MilnorOptions& options) {
  if (sb::is_unit_ideal(ideal, options.engine)) return 0;
  IdealPresentation work = ideal;
  if (options.eliminate_linear) work = eliminate_linear_variables(ideal).ideal;
  const auto c = sb::colength(work, sb::LocalOrdering{}, options.engine);
  if (!c.is_finite()) throw NotZeroDimensional("ideal is not zero-dimensional at the origin");
  return c.value();
}

}  // namespace singchi::milnor
