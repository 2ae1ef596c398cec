#pragma once

#include <cstdint>

#include "singchi/errors.hpp"
#include "singchi/poly/rational.hpp"

namespace singchi::sb::detail {

struct RationalField {
  using Elem = mpq_class;

  Elem from(const poly::Rational& q) const { return q; }
  poly::Rational to_rational(const Elem& e) const { return e; }
  static bool is_zero(const Elem& e) { return sgn(e) == 0; }
  static bool is_one(const Elem& e) { return e == 1; }
  Elem one() const { return Elem(1); }
  Elem inv(const Elem& e) const { return Elem(1) / e; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  // acc - a * b
  Elem sub_mul(const Elem& acc, const Elem& a, const Elem& b) const { return acc - a * b; }
};

__extension__ typedef unsigned __int128 uint128;

struct PrimeField {
  using Elem = std::uint64_t;
  std::uint64_t p;

  Elem reduce(const poly::Integer& z) const {
    poly::Integer r = z % poly::Integer(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
  }
  Elem from(const poly::Rational& q) const {
    const Elem den = reduce(q.get_den());
    if (den == 0) {
      throw BadPrime("denominator of " + poly::to_string(q) + " vanishes mod " + std::to_string(p));
    }
    return mul(reduce(q.get_num()), inv(den));
  }
  poly::Rational to_rational(Elem e) const {
    // Symmetric representative.
    if (e > p / 2) return poly::Rational(-poly::Integer(static_cast<unsigned long>(p - e)));
    return poly::Rational(poly::Integer(static_cast<unsigned long>(e)));
  }
  static bool is_zero(Elem e) { return e == 0; }
  static bool is_one(Elem e) { return e == 1; }
  Elem one() const { return 1; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<uint128>(a) * b) % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem sub_mul(Elem acc, Elem a, Elem b) const {
    const Elem prod = mul(a, b);
    return acc >= prod ? acc - prod : acc + (p - prod);
  }
  Elem pow(Elem b, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const { return pow(a, p - 2); }
};

}  // namespace singchi::sb::detail
