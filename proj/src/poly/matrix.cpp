#include "singchi/poly/matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "singchi/poly/operations.hpp"

namespace singchi::poly {

Polynomial determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  const Ring ring = m[0][0].ring();
  bool negate = false;
  Polynomial prev = Polynomial::constant(ring, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial(ring);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? num * (Rational(1) / prev.constant_term())
                                     : divide_exact(num, prev);
      }
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

std::vector<Polynomial> maximal_minors(const PolyMatrix& m) {
  const std::size_t rows = m.size();
  if (rows == 0) throw std::invalid_argument("maximal minors of an empty matrix");
  const std::size_t cols = m[0].size();
  if (rows > cols) throw std::invalid_argument("maximal minors need rows <= columns");
  if (cols > 62) throw std::invalid_argument("too many columns");
  const Ring ring = m[0][0].ring();

  // Laplace expansion along the last row, building minors of the first t
  // rows for every column subset of size t.
  std::unordered_map<std::uint64_t, Polynomial> layer;
  layer.emplace(0, Polynomial::constant(ring, Rational(1)));
  for (std::size_t t = 1; t <= rows; ++t) {
    std::unordered_map<std::uint64_t, Polynomial> next;
    for (const auto& [mask, minor] : layer) {
      if (minor.is_zero()) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (mask & (std::uint64_t{1} << c)) continue;
        const Polynomial& entry = m[t - 1][c];
        if (entry.is_zero()) continue;
        const std::uint64_t full = mask | (std::uint64_t{1} << c);
        // Position of column c inside the sorted subset gives the sign.
        std::size_t pos = 0;
        for (std::size_t b = 0; b < c; ++b) {
          if (mask & (std::uint64_t{1} << b)) ++pos;
        }
        const bool negative = ((t - 1) + pos) % 2 == 1;
        Polynomial contrib = entry * minor;
        auto [it, inserted] = next.try_emplace(full, ring);
        if (negative) {
          it->second -= contrib;
        } else {
          it->second += contrib;
        }
      }
    }
    layer = std::move(next);
  }

  std::vector<Polynomial> out;
  std::vector<std::size_t> subset(rows);
  for (std::size_t i = 0; i < rows; ++i) subset[i] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (auto c : subset) mask |= std::uint64_t{1} << c;
    auto it = layer.find(mask);
    out.push_back(it == layer.end() ? Polynomial(ring) : it->second);
    // Next subset in lexicographic order.
    std::size_t i = rows;
    while (i > 0 && subset[i - 1] == cols - rows + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < rows; ++j) subset[j] = subset[j - 1] + 1;
  }
  return out;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

}  // namespace singchi::poly
