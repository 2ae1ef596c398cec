#include "singchi/family/family.hpp"

#include <algorithm>
#include <set>

#include "singchi/errors.hpp"
#include "singchi/poly/operations.hpp"

namespace singchi::family {

Unfolding make_unfolding(const std::vector<Polynomial>& components, std::size_t n,
                         const std::string& parameter) {
  if (components.size() != n + 1) {
    throw NotNormalForm("expected " + std::to_string(n + 1) + " components, got " +
                        std::to_string(components.size()));
  }
  Unfolding F;
  F.n = n;
  F.ring = components.front().ring();
  F.parameter = parameter;
  F.ring.require(parameter);
  if (F.ring.size() != n + 1) {
    throw NotNormalForm("expected " + std::to_string(n) + " source variables plus " + parameter);
  }
  for (const auto& c : components) F.components.push_back(c.in_ring(F.ring));

  // Restrict to the parameter axis.
  const Ring axis({parameter});
  poly::VarAssignment at_axis(axis);
  for (const auto& v : F.ring.vars()) {
    if (v != parameter) at_axis.set(v, Rational(0));
  }
  F.origin_preserving = std::all_of(F.components.begin(), F.components.end(), [&](const Polynomial& c) {
    return poly::substitute(c, at_axis).is_zero();
  });
  return F;
}

Unfolding trivial_unfolding(const mps::MapGerm& f, const std::string& parameter) {
  const Ring ring = f.ring.extended({poly::fresh_name(parameter, f.ring.vars())});
  std::vector<Polynomial> components;
  for (const auto& c : f.components) components.push_back(c.in_ring(ring));
  return make_unfolding(components, f.n, ring.var(ring.size() - 1));
}

mps::MapGerm specialize(const Unfolding& F, const Rational& t0) {
  if (!F.origin_preserving) throw NotNormalForm("unfolding does not preserve the origin");
  poly::VarAssignment assignment(F.ring.without(F.parameter));
  assignment.set(F.parameter, t0);
  std::vector<Polynomial> components;
  for (const auto& c : F.components) components.push_back(poly::substitute(c, assignment));
  return mps::validate_corank1(components, F.n);
}

std::vector<Rational> default_samples() {
  return {Rational(0), poly::make_rational(1, 3), Rational(-1), poly::make_rational(7, 5)};
}

namespace {

void check_samples(const std::vector<Rational>& t_values) {
  std::set<Rational> seen;
  std::size_t nonzero = 0;
  bool has_zero = false;
  for (const auto& t : t_values) {
    if (!seen.insert(t).second) throw BadParams("parameter value " + poly::to_string(t) + " repeated");
    if (t == 0) {
      has_zero = true;
    } else {
      ++nonzero;
    }
  }
  if (!has_zero || nonzero < 2) {
    throw BadParams("samples must contain 0 and at least two non-zero values");
  }
}

std::vector<std::pair<std::string, std::int64_t>> invariants(const Sample& s) {
  const auto& t = *s.tuple;
  auto i = [](std::uint64_t v) { return static_cast<std::int64_t>(v); };
  return {{"mu_d2", i(t.mu_d2)},   {"mu_d2H", i(t.mu_d2H)}, {"mu_d3", i(t.mu_d3)},
          {"mu_d3H1", i(t.mu_d3H1)}, {"beta2", t.beta2},      {"beta3", t.beta3},
          {"beta4", t.beta4},        {"Q", i(t.Q)},           {"mu_I", s.mu_I},
          {"chi_mf", s.chi_mf}};
}

}  // namespace

FamilyVerdict family_check(const Unfolding& F, const std::vector<Rational>& t_values,
                           std::uint64_t seed, const milnor::MilnorOptions& options) {
  if (F.n != 3) throw BadInput("family check requires n = 3, got n = " + std::to_string(F.n));
  check_samples(t_values);

  FamilyVerdict v;
  for (const auto& t : t_values) {
    const mps::MapGerm f = specialize(F, t);
    Sample s;
    s.t = t;
    try {
      const auto report = euler::image_chi(f, seed, options);
      s.tuple = report.tuple;
      s.mu_I = report.mu_I;
      s.chi_mf = report.chi_mf;
    } catch (const Error& e) {
      s.error_kind = e.kind();
      s.error = e.what();
      v.failed.push_back("t = " + poly::to_string(t) + ": " + e.kind() + ": " + e.what());
    }
    v.samples.push_back(std::move(s));
  }

  std::vector<const Sample*> ok;
  for (const auto& s : v.samples) {
    if (s.tuple) ok.push_back(&s);
  }
  if (!ok.empty()) {
    const auto reference = invariants(*ok.front());
    for (std::size_t i = 0; i < reference.size(); ++i) {
      Variation var{reference[i].first, {}};
      bool varies = false;
      for (const Sample* s : ok) {
        const auto value = invariants(*s)[i].second;
        var.values.push_back(value);
        varies = varies || value != reference[i].second;
      }
      if (varies) v.certificate.push_back(std::move(var));
    }
  }
  v.constant = v.failed.empty() && v.certificate.empty();

  v.scope = "numerical hypotheses (computable part)";
  v.caveats = {
      "constancy is checked at the sampled parameter values only",
      "germ-at-origin computation: instabilities of f_t away from the origin are not detected",
      "good or excellent unfolding conditions and the stratification by stable type are assumed, not verified",
  };
  return v;
}

}  // namespace singchi::family
