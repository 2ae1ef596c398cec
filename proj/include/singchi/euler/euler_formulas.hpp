#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singchi/milnor/milnor.hpp"
#include "singchi/mps/multiple_points.hpp"

namespace singchi::euler {

using mps::InvariantTuple;
using poly::Polynomial;
using poly::Rational;

/// One stratum of a stratification: chi_pair is chi(closure, closure minus
/// stratum) and chi_tmf_reduced the reduced Euler characteristic of its
/// transverse Milnor fibre.
struct StratumDatum {
  std::string name;
  std::int64_t chi_pair = 0;
  std::int64_t chi_tmf_reduced = 0;
};

/// chi(general fibre) - chi(special fibre) = sum of chi_tmf_reduced * chi_pair.
std::int64_t stratified_euler_difference(const std::vector<StratumDatum>& strata);

/// Euler characteristics of the closures of the stable strata in the image
/// of a stabilisation of a germ C^3 -> C^4, plus the relative values.
struct StratumReport {
  std::int64_t chi_S1 = 0;
  std::int64_t chi_S11 = 0;
  std::int64_t chi_S111 = 0;
  std::int64_t chi_S2 = 0;
  std::int64_t chi_S1111 = 0;
  std::int64_t chi_S12 = 0;

  std::int64_t pair_S11 = 0;
  std::int64_t pair_S111 = 0;
  std::int64_t pair_S2 = 0;
};

/// Throws NonIntegralChi naming the first formula with a fractional value.
StratumReport strata_chi(const InvariantTuple& t);

/// The strata of the image Milnor fibre with their relative Euler
/// characteristics and transverse reduced Euler characteristics: +1 on the
/// cross-cap curve S2, -1 on the multi-germ strata, 0 on S1.
std::vector<StratumDatum> image_strata(const StratumReport& s);

/// Number of 3-spheres in the disentanglement. Throws NonIntegralChi or NegativeMuI.
std::int64_t image_milnor_number(const InvariantTuple& t);

/// Euler characteristic of the Milnor fibre of the image equation g.
std::int64_t chi_mf_image(const InvariantTuple& t);

/// chi(MF_g) - chi(Dis(f)).
std::int64_t chi_difference_3to4(const InvariantTuple& t);

struct ImageChiReport {
  InvariantTuple tuple;
  std::int64_t mu_I = 0;
  std::int64_t chi_dis = 0;
  std::int64_t chi_mf = 0;             // closed formula
  std::int64_t chi_difference = 0;
  std::int64_t chi_mf_stratified = 0;  // chi_dis + stratified difference
  StratumReport strata;
  bool consistency = false;
};

ImageChiReport image_chi_report(const InvariantTuple& t);

/// Invariant tuple of f followed by image_chi_report.
ImageChiReport image_chi(const mps::MapGerm& f, std::uint64_t seed,
                         const milnor::MilnorOptions& options = {});

struct ZariskiChi {
  std::int64_t chi_mf_F = 0;
  std::int64_t chi_special_fibre = 0;
  std::int64_t chi_mf_f = 0;
  /// For odd n: whether the reduced Euler characteristic of the special
  /// fibre equals mu_I(f). Absent for even n.
  std::optional<bool> odd_identity;
};

/// Euler characteristics for the composite of an ICIS-defining map f with
/// an isolated singularity g. mu_I(f) is supplied by the caller.
/// Throws BadParams on negative inputs or n < 2.
ZariskiChi zariski_chi(std::int64_t mu_g, std::int64_t mu_f, std::int64_t n, std::int64_t mu_I_f);

struct EquidimReport {
  std::uint64_t mu_phi = 0;
  std::int64_t chi_dis = 0;
  std::int64_t chi_edge = 0;  // chi of the cuspidal edge C
  std::int64_t chi_mf_H_formula = 0;
  std::int64_t chi_mf_H_stratified = 0;
  Polynomial discriminant;   // resultant in (variables of phi, target variable)
  Rational discriminant_unit;  // discriminant / (4 phi^3 + 27 w^2)
  bool discriminant_ok = false;
  std::string target_variable;
  bool agree = false;
};

/// The germ (x, y^3 + phi(x) y) : C^n -> C^n with phi in n-1 variables.
/// Runs both the closed formula and the stratified route for chi of the
/// Milnor fibre of the discriminant. Throws NonIsolated from mu(phi) and
/// BadParams when phi's ring does not have n-1 variables.
EquidimReport equidim_example(const Polynomial& phi, std::int64_t n,
                              const milnor::MilnorOptions& options = {});

}  // namespace singchi::euler
