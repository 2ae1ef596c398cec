#pragma once

#include <vector>

#include "singchi/poly/polynomial.hpp"

namespace singchi::poly {

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination. All entries must share one ring.
Polynomial determinant(PolyMatrix m);

/// All r x r minors of an r x c matrix (r <= c), one per column subset in
/// lexicographic order of the subsets.
std::vector<Polynomial> maximal_minors(const PolyMatrix& m);

/// Determinant of a square rational matrix.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace singchi::poly
