#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "singchi/poly/polynomial.hpp"

namespace singchi::poly {

/// Simultaneous substitution of variables by polynomials of a target ring.
/// Variables without an image are mapped by name into the target ring.
class VarAssignment {
 public:
  explicit VarAssignment(Ring target) : target_(std::move(target)) {}

  /// `image` is re-expressed in the target ring by name.
  VarAssignment& set(const std::string& var, const Polynomial& image);
  VarAssignment& set(const std::string& var, const Rational& value);

  const Ring& target() const noexcept { return target_; }
  const std::map<std::string, Polynomial>& images() const noexcept { return images_; }

 private:
  Ring target_;
  std::map<std::string, Polynomial> images_;
};

Polynomial substitute(const Polynomial& p, const VarAssignment& assignment);

/// Convenience: substitution staying in p's ring.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images);

/// Exact quotient p / d; throws NonDivisible when d does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& d);

/// Divided difference g[a_0, ..., a_j] of g with respect to the variable
/// `z`, where the a_i are variable names of `target` (repetitions allowed).
/// `target` must contain every variable of g other than z. Computed by the
/// recursive quotient formula with exact division; repeated arguments use
/// the confluent rule g[a,...,a] (m+1 copies) = g^(m)(a) / m!.
Polynomial divided_difference(const Polynomial& g, std::string_view z,
                              std::span<const std::string> args, const Ring& target);

/// Same, with target = (variables of g except z) followed by the new
/// argument names in order of first appearance.
Polynomial divided_difference(const Polynomial& g, std::string_view z,
                              std::span<const std::string> args);

/// Sylvester resultant of p and q with respect to `var`. Throws ZeroDegree
/// when either has degree 0 in var.
Polynomial resultant(const Polynomial& p, const Polynomial& q, std::string_view var);

/// J[i][j] = d gens[i] / d vars[j].
PolyMatrix jacobian(std::span<const Polynomial> gens, std::span<const std::string> vars);

}  // namespace singchi::poly
