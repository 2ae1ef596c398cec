#include "oracles.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace singchi::oracle {

namespace {

using Row = std::vector<std::pair<std::size_t, Rational>>;

// Incremental row echelon form over Q; rows are sparse and sorted by column.
class Echelon {
 public:
  explicit Echelon(std::size_t columns) : pivots_(columns) {}

  void add(Row row) {
    while (!row.empty()) {
      const std::size_t c = row.front().first;
      if (!pivots_[c]) {
        const Rational lead = row.front().second;
        for (auto& [col, v] : row) v /= lead;
        pivots_[c] = std::move(row);
        ++rank_;
        return;
      }
      row = subtract(row, *pivots_[c], row.front().second);
    }
  }

  std::size_t rank() const { return rank_; }

 private:
  static Row subtract(const Row& a, const Row& b, const Rational& factor) {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -factor * b[j].second);
        ++j;
      } else {
        Rational v = a[i].second - factor * b[j].second;
        if (v != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<std::optional<Row>> pivots_;
  std::size_t rank_ = 0;
};

void monomials_below(std::size_t nvars, std::vector<std::uint32_t>& cur, std::size_t var,
                     unsigned budget, std::vector<std::vector<std::uint32_t>>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e < budget; ++e) {
    cur[var] = e;
    monomials_below(nvars, cur, var + 1, budget - e, out);
  }
  cur[var] = 0;
}

}  // namespace

std::uint64_t truncated_colength(const sb::IdealPresentation& ideal, unsigned N) {
  const std::size_t v = ideal.ring.size();
  std::vector<std::vector<std::uint32_t>> monos;
  std::vector<std::uint32_t> cur(v, 0);
  monomials_below(v, cur, 0, N, monos);
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

  Echelon ech(monos.size());
  for (const auto& g : ideal.gens) {
    for (const auto& m : monos) {
      std::map<std::size_t, Rational> acc;
      for (const auto& [t, c] : g.terms()) {
        std::vector<std::uint32_t> e(v);
        unsigned deg = 0;
        for (std::size_t i = 0; i < v; ++i) {
          e[i] = t[i] + m[i];
          deg += e[i];
        }
        if (deg >= N) continue;
        acc[index.at(e)] += c;
      }
      Row row;
      for (auto& [col, c] : acc) {
        if (c != 0) row.emplace_back(col, c);
      }
      if (!row.empty()) ech.add(std::move(row));
    }
  }
  return monos.size() - ech.rank();
}

BruteColength brute_colength(const sb::IdealPresentation& ideal, std::uint64_t bound,
                             unsigned max_degree) {
  BruteColength r;
  std::uint64_t prev = truncated_colength(ideal, 1);
  for (unsigned N = 1; N <= max_degree; ++N) {
    if (prev > bound) {
      r.status = BruteColength::Status::Exceeded;
      r.value = prev;
      r.degree = N;
      return r;
    }
    const std::uint64_t next = truncated_colength(ideal, N + 1);
    if (next == prev) {
      r.status = BruteColength::Status::Exact;
      r.value = prev;
      r.degree = N;
      return r;
    }
    prev = next;
  }
  r.value = prev;
  r.degree = max_degree;
  return r;
}

Polynomial dd_by_symmetric_functions(const Polynomial& g, std::string_view z,
                                     std::span<const std::string> args, const Ring& target) {
  if (args.empty()) throw std::invalid_argument("no nodes");
  const std::size_t j = args.size() - 1;
  const auto coeffs = g.coefficients_in(g.ring().require(z));
  const std::size_t top = coeffs.size();

  std::vector<Polynomial> a;
  for (const auto& name : args) a.push_back(Polynomial::variable(target, name));
  const Polynomial one = Polynomial::constant(target, 1);

  // h[i][d] = h_d(a_i, ..., a_j)
  std::vector<std::vector<Polynomial>> h(args.size(), std::vector<Polynomial>(top + 1, Polynomial(target)));
  for (std::size_t d = 0; d <= top; ++d) h[j][d] = a[j].pow(static_cast<unsigned>(d));
  for (std::size_t i = j; i-- > 0;) {
    for (std::size_t d = 0; d <= top; ++d) {
      Polynomial s(target);
      Polynomial power = one;
      for (std::size_t e = 0; e <= d; ++e) {
        s += power * h[i + 1][d - e];
        power = power * a[i];
      }
      h[i][d] = s;
    }
  }

  Polynomial out(target);
  for (std::size_t m = j; m < top; ++m) {
    if (coeffs[m].is_zero()) continue;
    out += coeffs[m].in_ring(target) * h[0][m - j];
  }
  return out;
}

Rational evaluate(const Polynomial& p, const std::vector<std::pair<std::string, Rational>>& point) {
  const Ring& ring = p.ring();
  std::vector<std::optional<Rational>> value(ring.size());
  for (const auto& [name, v] : point) {
    if (auto i = ring.index_of(name)) value[*i] = v;
  }
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (m[i] == 0) continue;
      if (!value[i]) throw std::invalid_argument("no value for " + ring.var(i));
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= *value[i];
    }
    sum += t;
  }
  return sum;
}

Rational dd_lagrange(const Polynomial& g, std::string_view z, std::span<const Rational> nodes,
                     const std::vector<std::pair<std::string, Rational>>& point) {
  Rational sum = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto at = point;
    at.emplace_back(std::string(z), nodes[i]);
    Rational denom = 1;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (k != i) denom *= nodes[i] - nodes[k];
    }
    sum += evaluate(g, at) / denom;
  }
  return sum;
}

}  // namespace singchi::oracle
