#include "singchi/euler/euler_formulas.hpp"

#include "singchi/errors.hpp"
#include "singchi/poly/operations.hpp"

namespace singchi::euler {

using poly::Ring;

namespace {

struct Q {
  Rational a, b, c, d, beta2, beta3, q;
};

Q rationals(const InvariantTuple& t) {
  auto r = [](std::uint64_t v) { return Rational(poly::Integer(static_cast<unsigned long>(v))); };
  return Q{r(t.mu_d2), r(t.mu_d2H), r(t.mu_d3), r(t.mu_d3H1), Rational(t.beta2), Rational(t.beta3), r(t.Q)};
}

std::int64_t integral(const char* formula, const Rational& v) {
  if (!poly::is_integer(v)) {
    throw NonIntegralChi(std::string(formula) + " evaluates to " + poly::to_string(v) +
                         "; the tuple is not realisable");
  }
  return poly::to_int64(v);
}

Rational mu_I_value(const Q& v) {
  return (v.a + v.b) / 2 + (v.c + 3 * v.d + 2 * v.beta3) / 6 + v.q;
}

std::int64_t sign(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

std::int64_t stratified_euler_difference(const std::vector<StratumDatum>& strata) {
  std::int64_t sum = 0;
  for (const auto& s : strata) sum += s.chi_tmf_reduced * s.chi_pair;
  return sum;
}

StratumReport strata_chi(const InvariantTuple& t) {
  const Q v = rationals(t);
  StratumReport s;
  s.chi_S1 = integral("chi(S1 closure)", 1 - mu_I_value(v));
  s.chi_S11 = integral("chi(S11 closure)", v.beta2 + (v.a - v.b) / 2 + (v.c - v.beta3) / 3 + 3 * v.q);
  s.chi_S111 = integral("chi(S111 closure)", v.beta3 - ((v.c - 3 * v.d + 2 * v.beta3) / 6 + 3 * v.q));
  s.chi_S2 = integral("chi(S2 closure)", v.beta2 - v.b);
  s.chi_S1111 = integral("chi(S1111 closure)", v.q);
  s.chi_S12 = integral("chi(S12 closure)", v.d + v.beta3);

  // S1111 and S12 are finite sets, so they equal their closures.
  s.pair_S11 = s.chi_S11 - s.chi_S111 - s.chi_S2 + s.chi_S12;
  s.pair_S111 = s.chi_S111 - s.chi_S1111 - s.chi_S12;
  s.pair_S2 = s.chi_S2 - s.chi_S12;
  return s;
}

std::vector<StratumDatum> image_strata(const StratumReport& s) {
  return {
      {"S1", s.chi_S1, 0},
      {"S11", s.pair_S11, -1},
      {"S111", s.pair_S111, -1},
      {"S2", s.pair_S2, 1},
      {"S1111", s.chi_S1111, -1},
      {"S12", s.chi_S12, -1},
  };
}

std::int64_t image_milnor_number(const InvariantTuple& t) {
  const std::int64_t mu = integral("mu_I", mu_I_value(rationals(t)));
  if (mu < 0) throw NegativeMuI("mu_I = " + std::to_string(mu) + "; the tuple is not realisable");
  return mu;
}

std::int64_t chi_mf_image(const InvariantTuple& t) {
  const Q v = rationals(t);
  return integral("chi(MF_g)",
                  1 + v.beta2 - (v.a + 2 * v.b + (v.c + 5 * v.d) / 2 + 2 * v.beta3 + 4 * v.q));
}

std::int64_t chi_difference_3to4(const InvariantTuple& t) {
  const Q v = rationals(t);
  return integral("chi(MF_g) - chi(Dis)",
                  v.beta2 - ((v.a + 3 * v.b) / 2 + (v.c + 6 * v.d + 5 * v.beta3) / 3 + 3 * v.q));
}

ImageChiReport image_chi_report(const InvariantTuple& t) {
  ImageChiReport r;
  r.tuple = t;
  r.strata = strata_chi(t);
  r.mu_I = image_milnor_number(t);
  r.chi_dis = 1 - r.mu_I;
  r.chi_mf = chi_mf_image(t);
  r.chi_difference = chi_difference_3to4(t);
  r.chi_mf_stratified = r.chi_dis + stratified_euler_difference(image_strata(r.strata));
  r.consistency = r.chi_mf == r.chi_mf_stratified && r.chi_mf == r.chi_dis + r.chi_difference;
  return r;
}

ImageChiReport image_chi(const mps::MapGerm& f, std::uint64_t seed,
                         const milnor::MilnorOptions& options) {
  return image_chi_report(mps::invariant_tuple(f, seed, options));
}

ZariskiChi zariski_chi(std::int64_t mu_g, std::int64_t mu_f, std::int64_t n, std::int64_t mu_I_f) {
  if (mu_g < 0 || mu_f < 0 || mu_I_f < 0) throw BadParams("Milnor numbers must be non-negative");
  if (n < 2) throw BadParams("n must be at least 2");
  ZariskiChi z;
  z.chi_mf_f = 1 + sign(n - 2) * mu_f;
  z.chi_special_fibre = mu_I_f + (sign(n) + 1) * mu_g * z.chi_mf_f + 1;
  z.chi_mf_F = z.chi_special_fibre - mu_g * z.chi_mf_f;
  if (n % 2 == 1) z.odd_identity = (z.chi_special_fibre - 1 == mu_I_f);
  return z;
}

EquidimReport equidim_example(const Polynomial& phi, std::int64_t n,
                              const milnor::MilnorOptions& options) {
  if (n < 2) throw BadParams("n must be at least 2");
  const Ring& base = phi.ring();
  if (static_cast<std::int64_t>(base.size()) != n - 1) {
    throw BadParams("phi must be a polynomial in n-1 = " + std::to_string(n - 1) + " variables");
  }
  EquidimReport r;
  r.mu_phi = milnor::hypersurface_milnor(phi, options).mu;
  const auto mu = static_cast<std::int64_t>(r.mu_phi);

  r.chi_mf_H_formula = -1 + 3 * sign(n - 1) * mu;
  r.chi_dis = 1 + sign(n - 1) * mu;
  r.chi_edge = 1 + sign(n - 2) * mu;
  r.chi_mf_H_stratified = r.chi_dis + stratified_euler_difference({{"C", r.chi_edge, -2}});
  r.agree = r.chi_mf_H_formula == r.chi_mf_H_stratified;

  // Discriminant: eliminate y from y^3 + phi y - w and its y-derivative.
  std::vector<std::string> vars = base.vars();
  const std::string y = poly::fresh_name("y", vars);
  vars.push_back(y);
  r.target_variable = poly::fresh_name("w", vars);
  vars.push_back(r.target_variable);
  const Ring ring(vars);
  const Polynomial ph = phi.in_ring(ring);
  const Polynomial yv = Polynomial::variable(ring, y);
  const Polynomial wv = Polynomial::variable(ring, r.target_variable);
  const Polynomial cubic = yv.pow(3) + ph * yv - wv;
  const Polynomial res = poly::resultant(cubic, cubic.derivative(y), y);
  std::vector<std::string> target_vars = base.vars();
  target_vars.push_back(r.target_variable);
  r.discriminant = res.in_ring(Ring(target_vars));

  const Polynomial expected = ph.pow(3) * Rational(4) + wv.pow(2) * Rational(27);
  try {
    const Polynomial unit = poly::divide_exact(res, expected);
    r.discriminant_ok = unit.is_constant() && !unit.is_zero();
    if (unit.is_constant()) r.discriminant_unit = unit.constant_term();
  } catch (const NonDivisible&) {
    r.discriminant_ok = false;
  }
  return r;
}

}  // namespace singchi::euler
