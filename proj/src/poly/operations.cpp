#include "singchi/poly/operations.hpp"

#include <algorithm>
#include <utility>

#include "singchi/errors.hpp"
#include "singchi/poly/matrix.hpp"

namespace singchi::poly {

VarAssignment& VarAssignment::set(const std::string& var, const Polynomial& image) {
  images_.insert_or_assign(var, image.in_ring(target_));
  return *this;
}

VarAssignment& VarAssignment::set(const std::string& var, const Rational& value) {
  images_.insert_or_assign(var, Polynomial::constant(target_, value));
  return *this;
}

Polynomial substitute(const Polynomial& p, const VarAssignment& assignment) {
  const Ring& src = p.ring();
  const Ring& dst = assignment.target();
  std::vector<Polynomial> image(src.size());
  std::vector<std::vector<Polynomial>> powers(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (p.degree_in(i) == 0) continue;
    auto it = assignment.images().find(src.var(i));
    image[i] = it != assignment.images().end() ? it->second
                                               : Polynomial::variable(dst, src.var(i));
    powers[i].push_back(Polynomial::constant(dst, Rational(1)));
  }
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    while (cache.size() <= e) cache.push_back(cache.back() * image[i]);
    return cache[e];
  };
  Polynomial out(dst);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(dst, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) t = t * power_of(i, m[i]);
    }
    out += t;
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images) {
  VarAssignment a(p.ring());
  for (const auto& [v, img] : images) a.set(v, img);
  return substitute(p, a);
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw NonDivisible("division by the zero polynomial");
  Polynomial rem = p.in_ring(d.ring());
  Polynomial quot(d.ring());
  const Monomial& lm = d.leading_monomial();
  const Rational& lc = d.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    if (!lm.divides(rm)) {
      throw NonDivisible("(" + to_string(d) + ") does not divide (" + to_string(p) + ")");
    }
    Polynomial t = Polynomial::term(d.ring(), lm.quotient_of(rm), rem.leading_coefficient() / lc);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

namespace {

class DividedDifference {
 public:
  DividedDifference(const Polynomial& g, std::string_view z, std::vector<std::string> args,
                    const Ring& target)
      : g_(g), z_(z), args_(std::move(args)), target_(target),
        memo_(args_.size(), std::vector<Polynomial>(args_.size())),
        done_(args_.size(), std::vector<bool>(args_.size(), false)) {}

  Polynomial run() { return at(0, args_.size() - 1); }

 private:
  Polynomial evaluate_at(const Polynomial& h, const std::string& a) const {
    VarAssignment asg(target_);
    if (h.ring().contains(z_)) asg.set(z_, Polynomial::variable(target_, a));
    return substitute(h, asg);
  }

  const Polynomial& at(std::size_t i, std::size_t j) {
    if (done_[i][j]) return memo_[i][j];
    Polynomial value;
    if (args_[i] == args_[j]) {
      // Grouped arguments: equal endpoints mean the whole block is equal.
      const auto m = static_cast<unsigned>(j - i);
      Polynomial h = g_;
      if (g_.ring().contains(z_)) {
        for (unsigned k = 0; k < m; ++k) h = h.derivative(z_);
      } else if (m > 0) {
        h = Polynomial(g_.ring());
      }
      value = evaluate_at(h, args_[i]) * (Rational(1) / factorial(m));
    } else {
      Polynomial num = at(i, j - 1) - at(i + 1, j);
      Polynomial den = Polynomial::variable(target_, args_[i]) -
                       Polynomial::variable(target_, args_[j]);
      value = divide_exact(num, den);
    }
    memo_[i][j] = std::move(value);
    done_[i][j] = true;
    return memo_[i][j];
  }

  const Polynomial& g_;
  std::string z_;
  std::vector<std::string> args_;
  Ring target_;
  std::vector<std::vector<Polynomial>> memo_;
  std::vector<std::vector<bool>> done_;
};

}  // namespace

Polynomial divided_difference(const Polynomial& g, std::string_view z,
                              std::span<const std::string> args, const Ring& target) {
  if (args.empty()) throw EmptyArgs("divided difference needs at least one argument");
  for (const auto& a : args) target.require(a);
  // Group equal names together (order of first appearance). Divided
  // differences are symmetric, and grouping makes every contiguous range
  // either constant or have distinct endpoints.
  std::vector<std::string> grouped;
  std::vector<std::string> seen;
  for (const auto& a : args) {
    if (std::find(seen.begin(), seen.end(), a) != seen.end()) continue;
    seen.push_back(a);
    for (const auto& b : args) {
      if (b == a) grouped.push_back(b);
    }
  }
  return DividedDifference(g, z, std::move(grouped), target).run();
}

Polynomial divided_difference(const Polynomial& g, std::string_view z,
                              std::span<const std::string> args) {
  Ring target = g.ring().without(z).extended(std::vector<std::string>(args.begin(), args.end()));
  return divided_difference(g, z, args, target);
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, std::string_view var) {
  const std::size_t v = p.ring().require(var);
  const Polynomial qq = q.in_ring(p.ring());
  const auto a = p.coefficients_in(v);
  const auto b = qq.coefficients_in(v);
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  if (m == 0 || n == 0 || p.is_zero() || qq.is_zero()) {
    throw ZeroDegree("resultant needs positive degree in '" + std::string(var) + "'");
  }
  const std::size_t size = m + n;
  PolyMatrix s(size, std::vector<Polynomial>(size, Polynomial(p.ring())));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  }
  return determinant(std::move(s));
}

PolyMatrix jacobian(std::span<const Polynomial> gens, std::span<const std::string> vars) {
  PolyMatrix j;
  j.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    row.reserve(vars.size());
    for (const auto& v : vars) {
      row.push_back(g.ring().contains(v) ? g.derivative(v) : Polynomial(g.ring()));
    }
    j.push_back(std::move(row));
  }
  return j;
}

}  // namespace singchi::poly
