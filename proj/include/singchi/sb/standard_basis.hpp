#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singchi/poly/polynomial.hpp"

namespace singchi::sb {

using poly::Polynomial;
using poly::Rational;
using poly::Ring;

enum class OrderingKind {
  NegDegRevLex,  // "ds": lower degree first, ties broken reverse-lexicographically
  NegDegLex,     // "Ds": lower degree first, ties broken lexicographically
};

std::string to_string(OrderingKind kind);

/// A local monomial ordering (1 is the largest monomial). An empty
/// variable order means the ring's declared order.
struct LocalOrdering {
  OrderingKind kind = OrderingKind::NegDegRevLex;
  std::vector<std::string> variable_order;
};

/// Finite generator list of an ideal in the local ring at the origin.
struct IdealPresentation {
  IdealPresentation() = default;
  /// Generators are re-expressed in `ring` by variable name.
  IdealPresentation(Ring ring, std::vector<Polynomial> gens);

  Ring ring;
  std::vector<Polynomial> gens;
};

/// Vector-space dimension of O/I, possibly infinite.
class Colength {
 public:
  static Colength finite(std::uint64_t v) { return Colength(v); }
  static Colength infinite() { return Colength(std::nullopt); }

  bool is_finite() const noexcept { return value_.has_value(); }
  /// Requires is_finite().
  std::uint64_t value() const { return value_.value(); }
  std::string to_string() const;

  friend bool operator==(const Colength&, const Colength&) = default;

 private:
  explicit Colength(std::optional<std::uint64_t> v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

/// 2^61 - 1, used for computations that only steer exact ones.
inline constexpr std::uint64_t kGuidePrime = 2305843009213693951ull;

/// Coefficient field for standard-basis work. `prime == 0` selects exact
/// rationals; otherwise arithmetic is modulo the given prime, and results
/// are only correct with high probability.
struct FieldSpec {
  std::uint64_t prime = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws BadPrime unless p is a prime below 2^62.
  static FieldSpec prime_field(std::uint64_t p);
  bool is_prime_field() const noexcept { return prime != 0; }
  std::string to_string() const;
};

struct EngineOptions {
  std::uint64_t max_steps = 1'000'000;
  FieldSpec field;
};

/// Standard basis of I for the local ordering, by Mora's tangent-cone
/// normal form. The result is minimal, monic and sorted by leading monomial
/// (largest first). The unit ideal yields {1}. Throws ResourceLimit when
/// more than max_steps reduction steps are needed.
IdealPresentation standard_basis(const IdealPresentation& ideal, const LocalOrdering& ord = {},
                                 const EngineOptions& options = {});

/// dim O/I. Over Q a finite answer is certified by d(N) = d(N+1) for
/// d(N) = dim O/(I + m^N), and an infinite one by d(N) exceeding the bound
/// maxdeg^n that holds for m-primary ideals, or by having fewer generators
/// than variables. A run modulo kGuidePrime only picks which N to verify.
Colength colength(const IdealPresentation& ideal, const LocalOrdering& ord = {},
                  const EngineOptions& options = {});

/// True when I is the whole local ring, i.e. some generator does not vanish
/// at the origin (the germ it defines is empty).
bool is_unit_ideal(const IdealPresentation& ideal, const EngineOptions& options = {});

/// Leading monomial of p in the local ordering (as an exponent vector in
/// p's ring). Requires p nonzero.
poly::Monomial local_leading_monomial(const Polynomial& p, const LocalOrdering& ord = {});

/// n x n invertible matrix with small rational entries derived from seed.
/// Seed 0 gives the identity.
std::vector<std::vector<Rational>> linear_change_matrix(std::size_t n, std::uint64_t seed);

/// Applies x_i -> sum_j M[i][j] x_j with M = linear_change_matrix(n, seed).
IdealPresentation generic_linear_change(const IdealPresentation& ideal, std::uint64_t seed);

}  // namespace singchi::sb
