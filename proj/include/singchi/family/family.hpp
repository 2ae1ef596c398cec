#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singchi/euler/euler_formulas.hpp"
#include "singchi/mps/multiple_points.hpp"

namespace singchi::family {

using poly::Polynomial;
using poly::Rational;
using poly::Ring;

/// One-parameter unfolding F(x, z, t) = (f_t(x, z), t) of a corank-1 germ.
/// The ring lists x_1..x_{n-1}, z and the parameter (in any position).
struct Unfolding {
  std::size_t n = 0;
  Ring ring;
  std::string parameter;
  std::vector<Polynomial> components;  // n + 1 components of f_t
  bool origin_preserving = false;      // every component vanishes at x = z = 0 for all t
};

/// Builds an unfolding and records whether it preserves the origin. Throws
/// NotNormalForm when the component count or ring shape is wrong, and
/// UnknownVariable when the parameter is not a ring variable.
Unfolding make_unfolding(const std::vector<Polynomial>& components, std::size_t n,
                         const std::string& parameter = "t");

/// The trivial unfolding (f(x), t).
Unfolding trivial_unfolding(const mps::MapGerm& f, const std::string& parameter = "t");

/// f_{t0}. Throws NotNormalForm if F does not preserve the origin or f_{t0}
/// leaves the corank-1 normal form, NotCorankOne if its rank jumps.
mps::MapGerm specialize(const Unfolding& F, const Rational& t0);

struct Sample {
  Rational t;
  std::optional<mps::InvariantTuple> tuple;
  std::int64_t mu_I = 0;
  std::int64_t chi_mf = 0;
  std::string error_kind;  // empty on success
  std::string error;
};

/// Values taken by one invariant across the successful samples.
struct Variation {
  std::string invariant;
  std::vector<std::int64_t> values;  // in sample order
};

struct FamilyVerdict {
  std::vector<Sample> samples;
  bool constant = false;
  std::vector<Variation> certificate;  // invariants that varied
  std::vector<std::string> failed;     // samples whose computation failed
  std::string scope;
  std::vector<std::string> caveats;
};

/// Default parameter samples.
std::vector<Rational> default_samples();

/// Computes the invariant tuple, mu_I and chi(MF_g) of f_t at every sample
/// and reports whether all of them agree. Requires n = 3 and samples that
/// contain 0 plus at least two distinct non-zero values. A computational
/// error at one sample is recorded for that sample and makes the verdict
/// non-constant.
FamilyVerdict family_check(const Unfolding& F, const std::vector<Rational>& t_values,
                           std::uint64_t seed, const milnor::MilnorOptions& options = {});

}  // namespace singchi::family
