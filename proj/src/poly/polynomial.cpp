#include "singchi/poly/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "singchi/errors.hpp"

namespace singchi::poly {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  degree_ -= exps_[i];
  exps_[i] = e;
  degree_ += e;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r = other;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  r.degree_ -= degree_;
  return r;
}

bool DegLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a.exponents() > b.exponents();
}

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
  Polynomial p(ring);
  p.add_term(Monomial(ring.size()), c);
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::string_view name) {
  Polynomial p(ring);
  p.add_term(Monomial::variable(ring.size(), ring.require(name)), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Ring& ring, const Monomial& m, const Rational& c) {
  Polynomial p(ring);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
  return coefficient(Monomial(ring_.size()));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != ring_.size()) throw std::invalid_argument("monomial does not match ring");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (!(ring_ == o.ring_)) throw std::invalid_argument("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    const auto e = m[var];
    if (e == 0) continue;
    Monomial d = m;
    d.set(var, e - 1);
    r.add_term(d, c * e);
  }
  return r;
}

Polynomial Polynomial::in_ring(const Ring& target) const {
  if (ring_ == target) return *this;
  std::vector<std::size_t> map(ring_.size(), 0);
  std::vector<bool> used(ring_.size(), false);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) used[i] = used[i] || m[i] > 0;
  }
  for (std::size_t i = 0; i < ring_.size(); ++i) {
    if (!used[i]) continue;
    auto j = target.index_of(ring_.var(i));
    if (!j) throw UnknownVariable(ring_.var(i));
    map[i] = *j;
  }
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Monomial t(target.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) t.set(map[i], m[i]);
    }
    r.add_term(t, c);
  }
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> out(degree_in(var) + 1, Polynomial(ring_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest.set(var, 0);
    out[m[var]].add_term(rest, c);
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.ring().var(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace singchi::poly
