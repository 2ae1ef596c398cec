#include "singchi/sb/standard_basis.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "field.hpp"
#include "mora.hpp"
#include "singchi/errors.hpp"
#include "singchi/poly/matrix.hpp"
#include "singchi/poly/operations.hpp"

namespace singchi::sb {

using detail::EPoly;
using detail::Exp;
using detail::MonomialOrder;
using detail::MoraEngine;
using detail::PrimeField;
using detail::RationalField;
using detail::Term;

std::string to_string(OrderingKind kind) {
  return kind == OrderingKind::NegDegRevLex ? "ds" : "Ds";
}

IdealPresentation::IdealPresentation(Ring r, std::vector<Polynomial> g) : ring(std::move(r)) {
  gens.reserve(g.size());
  for (auto& p : g) gens.push_back(p.in_ring(ring));
}

std::string Colength::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("infinite");
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  const PrimeField f{n};
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = f.pow(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s && composite; ++r) {
      x = f.mul(x, x);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

// Internal variable i is ring variable perm[i].
std::vector<std::size_t> variable_permutation(const Ring& ring, const LocalOrdering& ord) {
  std::vector<std::size_t> perm;
  if (ord.variable_order.empty()) {
    for (std::size_t i = 0; i < ring.size(); ++i) perm.push_back(i);
    return perm;
  }
  if (ord.variable_order.size() != ring.size()) {
    throw BadInput("variable order must list every ring variable exactly once");
  }
  for (const auto& name : ord.variable_order) {
    const std::size_t idx = ring.require(name);
    if (std::find(perm.begin(), perm.end(), idx) != perm.end()) {
      throw BadInput("variable '" + name + "' repeated in ordering");
    }
    perm.push_back(idx);
  }
  return perm;
}

template <class F>
EPoly<F> to_internal(const Polynomial& p, const std::vector<std::size_t>& perm,
                     const MonomialOrder& order, const F& field) {
  EPoly<F> out;
  out.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    Exp e;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      const auto x = m[perm[i]];
      if (x > 4096) throw ResourceLimit("exponent too large for the standard-basis engine");
      e.e[i] = static_cast<std::uint16_t>(x);
      e.deg += x;
    }
    auto v = field.from(c);
    if (!F::is_zero(v)) out.push_back(Term<F>{e, std::move(v)});
  }
  std::sort(out.begin(), out.end(),
            [&](const Term<F>& a, const Term<F>& b) { return order.compare(a.m, b.m) > 0; });
  return out;
}

template <class F>
Polynomial from_internal(const EPoly<F>& p, const Ring& ring, const std::vector<std::size_t>& perm,
                         const F& field) {
  Polynomial out(ring);
  for (const auto& t : p) {
    poly::Monomial m(ring.size());
    for (std::size_t i = 0; i < perm.size(); ++i) m.set(perm[i], t.m.e[i]);
    out.add_term(m, field.to_rational(t.c));
  }
  return out;
}

struct Setup {
  std::vector<std::size_t> perm;
  MonomialOrder order;
};

Setup prepare(const IdealPresentation& ideal, const LocalOrdering& ord) {
  if (ideal.ring.size() > detail::kMaxVars) {
    throw ResourceLimit("standard-basis engine supports at most " +
                        std::to_string(detail::kMaxVars) + " variables");
  }
  return Setup{variable_permutation(ideal.ring, ord), MonomialOrder(ord.kind, ideal.ring.size())};
}

template <class F>
std::vector<EPoly<F>> convert_gens(const IdealPresentation& ideal, const Setup& s, const F& field) {
  std::vector<EPoly<F>> gens;
  for (const auto& g : ideal.gens) gens.push_back(to_internal(g.in_ring(ideal.ring), s.perm, s.order, field));
  return gens;
}

// Calls fn(field) with the field selected by options.
template <class Fn>
auto with_field(const EngineOptions& options, Fn&& fn) {
  if (options.field.is_prime_field()) {
    const PrimeField f{options.field.prime};
    return fn(f);
  }
  const RationalField f{};
  return fn(f);
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62) || !is_prime(p)) {
    throw BadPrime(std::to_string(p) + " is not a prime below 2^62");
  }
  return FieldSpec{p};
}

std::string FieldSpec::to_string() const {
  return prime == 0 ? std::string("rational") : "fp:" + std::to_string(prime);
}

IdealPresentation standard_basis(const IdealPresentation& ideal, const LocalOrdering& ord,
                                 const EngineOptions& options) {
  const Setup s = prepare(ideal, ord);
  return with_field(options, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    MoraEngine<F> engine(field, s.order, options.max_steps);
    engine.run(convert_gens(ideal, s, field), false);
    std::vector<Polynomial> out;
    for (const auto& p : engine.minimal_basis()) out.push_back(from_internal(p, ideal.ring, s.perm, field));
    return IdealPresentation(ideal.ring, std::move(out));
  });
}

namespace {

template <class F>
std::optional<std::uint64_t> mora_count(const IdealPresentation& ideal, const Setup& s, const F& field,
                                        const EngineOptions& options, std::optional<std::uint32_t> bound,
                                        std::optional<std::uint32_t>* found_bound = nullptr) {
  MoraEngine<F> engine(field, s.order, options.max_steps);
  if (bound) engine.impose_bound(*bound);
  engine.run(convert_gens(ideal, s, field), true);
  if (found_bound) *found_bound = engine.truncation_bound();
  return engine.count_standard_monomials();
}

// When I is m-primary, n general K-combinations of its generators already
// generate an m-primary ideal J in I (prime avoidance), and by Bezout
// dim O/J <= maxdeg^n. So d(N) = dim O/(I + m^N) above that bound for any N
// proves the colength infinite.
std::uint64_t primary_colength_bound(const IdealPresentation& ideal) {
  std::uint64_t maxdeg = 0;
  for (const auto& g : ideal.gens) maxdeg = std::max(maxdeg, g.total_degree());
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i < ideal.ring.size(); ++i) {
    if (maxdeg != 0 && bound > UINT64_MAX / maxdeg) return UINT64_MAX;
    bound *= maxdeg;
  }
  return bound;
}

// Over Q the tangent-cone algorithm can spend most of its time on
// coefficient growth in degrees that turn out to be irrelevant, and an
// infinite colength is only recognised once the whole standard basis is
// known. Computations modulo a large prime therefore look for a degree N
// that settles the question, and the exact answer is then read off from
// d(N) computed over Q modulo m^N:
//  - d(N) = d(N+1) gives m^N in I + m^(N+1), hence m^N in I by Nakayama,
//    and the colength is d(N);
//  - d(N) above the bound of primary_colength_bound means infinite.
// Reduction mod p can only lower ranks, so d(N) mod p bounds d(N) over Q
// from above and is a sound guide for where to look. When the untruncated
// run mod p finishes and finds the colength infinite, the plain rational
// computation is usually just as quick, so it decides directly. The prime
// decides nothing: without a certificate the plain rational computation does.
struct Guide {
  std::optional<std::uint32_t> finite_at;
  std::optional<std::uint32_t> infinite_at;
  bool looks_infinite = false;  // the untruncated run finished without a bound
  std::optional<std::uint64_t> value;  // d(finite_at) in the guide's field
};

constexpr std::uint32_t kMaxGuideDegree = 96;

// Both certificates hold over any field, so for prime-field work the guide
// is already the answer.
Guide guide(const IdealPresentation& ideal, const Setup& s, const PrimeField& f, const EngineOptions& options,
            std::uint64_t primary_bound) {
  EngineOptions quick = options;
  quick.max_steps = std::min<std::uint64_t>(options.max_steps, 20000);
  try {
    std::optional<std::uint32_t> bound;
    if (const auto count = mora_count(ideal, s, f, quick, std::nullopt, &bound)) {
      return Guide{bound, std::nullopt, false, count};
    }
    return Guide{std::nullopt, std::nullopt, true, std::nullopt};
  } catch (const ResourceLimit&) {
  }
  // Deepen through truncated computations, jumping ahead when d(N) grows
  // towards the primary bound.
  std::uint32_t N = 8;
  while (N <= kMaxGuideDegree) {
    const std::uint64_t a = *mora_count(ideal, s, f, options, N);
    const std::uint64_t b = *mora_count(ideal, s, f, options, N + 1);
    if (a == b) return Guide{N, std::nullopt, false, a};
    if (b > primary_bound) return Guide{std::nullopt, N + 1, false, std::nullopt};
    std::uint64_t next = 2 * std::uint64_t{N};
    const std::uint64_t need = (primary_bound + 1 - b + (b - a) - 1) / (b - a);
    next = std::min(next, N + 1 + need);
    N = static_cast<std::uint32_t>(next);
  }
  return {};
}

Colength exact_colength(const IdealPresentation& ideal, const Setup& s, const EngineOptions& options) {
  const RationalField q{};
  const std::uint64_t primary_bound = primary_colength_bound(ideal);
  Guide g;
  try {
    g = guide(ideal, s, PrimeField{kGuidePrime}, options, primary_bound);
  } catch (const BadPrime&) {
  } catch (const ResourceLimit&) {
  }
  if (g.finite_at) {
    const auto a = mora_count(ideal, s, q, options, *g.finite_at);
    const auto b = mora_count(ideal, s, q, options, *g.finite_at + 1);
    if (a && b && *a == *b) return Colength::finite(*a);
  }
  if (g.infinite_at) {
    const auto d = mora_count(ideal, s, q, options, *g.infinite_at);
    if (d && *d > primary_bound) return Colength::infinite();
  }
  const auto count = mora_count(ideal, s, q, options, std::nullopt);
  return count ? Colength::finite(*count) : Colength::infinite();
}

Colength modular_colength(const IdealPresentation& ideal, const Setup& s, const EngineOptions& options) {
  const PrimeField f{options.field.prime};
  const Guide g = guide(ideal, s, f, options, primary_colength_bound(ideal));
  if (g.value) return Colength::finite(*g.value);
  if (g.infinite_at || g.looks_infinite) return Colength::infinite();
  const auto count = mora_count(ideal, s, f, options, std::nullopt);
  return count ? Colength::finite(*count) : Colength::infinite();
}

// Fewer than n generators of a proper ideal cannot be m-primary (Krull).
bool too_few_generators(const IdealPresentation& ideal) {
  std::size_t nonzero = 0;
  for (const auto& g : ideal.gens) {
    if (!g.is_zero()) ++nonzero;
  }
  return nonzero < ideal.ring.size();
}

}  // namespace

Colength colength(const IdealPresentation& ideal, const LocalOrdering& ord,
                  const EngineOptions& options) {
  const Setup s = prepare(ideal, ord);
  if (is_unit_ideal(ideal, options)) return Colength::finite(0);
  if (too_few_generators(ideal)) return Colength::infinite();
  if (!options.field.is_prime_field()) return exact_colength(ideal, s, options);
  return modular_colength(ideal, s, options);
}

bool is_unit_ideal(const IdealPresentation& ideal, const EngineOptions& options) {
  // O is local: I = O exactly when some generator is a unit, i.e. does not
  // vanish at the origin.
  for (const auto& g : ideal.gens) {
    if (g.constant_term() != 0) {
      if (!options.field.is_prime_field()) return true;
      const PrimeField f{options.field.prime};
      if (!PrimeField::is_zero(f.from(g.constant_term()))) return true;
    }
  }
  return false;
}

poly::Monomial local_leading_monomial(const Polynomial& p, const LocalOrdering& ord) {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of zero");
  const IdealPresentation single(p.ring(), {p});
  const Setup s = prepare(single, ord);
  const RationalField f{};
  const auto internal = to_internal(p, s.perm, s.order, f);
  return from_internal(EPoly<RationalField>{internal.front()}, p.ring(), s.perm, f).leading_monomial();
}

std::vector<std::vector<Rational>> linear_change_matrix(std::size_t n, std::uint64_t seed) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  if (seed == 0) {
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  }
  std::mt19937_64 rng(seed);
  for (;;) {
    for (auto& row : m) {
      for (auto& x : row) {
        const auto num = static_cast<long>(rng() % 11) - 5;
        const auto den = static_cast<long>(rng() % 3) + 1;
        x = poly::make_rational(num, den);
      }
    }
    if (poly::determinant(m) != 0) return m;
  }
}

IdealPresentation generic_linear_change(const IdealPresentation& ideal, std::uint64_t seed) {
  const Ring& ring = ideal.ring;
  const auto m = linear_change_matrix(ring.size(), seed);
  poly::VarAssignment assignment(ring);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    Polynomial image(ring);
    for (std::size_t j = 0; j < ring.size(); ++j) {
      image += Polynomial::variable(ring, ring.var(j)) * m[i][j];
    }
    assignment.set(ring.var(i), image);
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens) gens.push_back(poly::substitute(g, assignment));
  return IdealPresentation(ring, std::move(gens));
}

}  // namespace singchi::sb
