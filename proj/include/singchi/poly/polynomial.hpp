#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "singchi/poly/rational.hpp"
#include "singchi/poly/ring.hpp"

namespace singchi::poly {

/// Exponent vector aligned with a ring's variable order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, std::uint32_t e);
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other): returns other / *this.
  Monomial quotient_of(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
};

/// Degree-then-lexicographic order, greatest first. Used for term storage
/// and printing; it is not the ordering the standard-basis engine uses.
struct DegLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact multivariate polynomial over the rationals in a named ring.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, DegLexGreater>;

  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, const Rational& c);
  static Polynomial variable(const Ring& ring, std::string_view name);
  static Polynomial term(const Ring& ring, const Monomial& m, const Rational& c);

  const Ring& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Leading term in degree-lex order; requires !is_zero().
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  std::uint64_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  std::uint32_t degree_in(std::string_view name) const { return degree_in(ring_.require(name)); }
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  /// Adds c*m in place.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  Polynomial pow(unsigned e) const;

  Polynomial derivative(std::size_t var) const;
  Polynomial derivative(std::string_view name) const { return derivative(ring_.require(name)); }

  /// Re-expresses the polynomial in `target`, matching variables by name.
  /// Throws UnknownVariable if a variable that occurs is missing there.
  Polynomial in_ring(const Ring& target) const;

  /// Coefficients of powers of `var`: result[i] is the coefficient of var^i,
  /// a polynomial in the same ring not involving var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_ring(const Polynomial& o) const;

  Ring ring_;
  TermMap terms_;
};

/// Canonical text in the polynomial input language; parse(to_string(p)) == p.
std::string to_string(const Polynomial& p);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

}  // namespace singchi::poly
