#pragma once

// Mora's tangent-cone standard basis algorithm for degree-anticompatible
// local orderings, generic over the coefficient field.
//
// Once the leading ideal contains every monomial of some degree N, the
// ideal contains m^N (Nakayama), so all further work happens modulo m^N:
// terms of degree >= N are dropped everywhere. This keeps zero-dimensional
// computations finite-dimensional.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>
#include "singchi/errors.hpp"
#include "singchi/sb/standard_basis.hpp"

namespace singchi::sb::detail {

constexpr std::size_t kMaxVars = 16;

struct Exp {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  friend bool operator==(const Exp& a, const Exp& b) { return a.e == b.e; }
};

inline Exp mul(const Exp& a, const Exp& b) {
  Exp r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  return r;
}

inline bool divides(const Exp& a, const Exp& b) {
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

// b / a, requires divides(a, b).
inline Exp quotient(const Exp& a, const Exp& b) {
  Exp r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
  r.deg = b.deg - a.deg;
  return r;
}

inline Exp lcm(const Exp& a, const Exp& b) {
  Exp r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

class MonomialOrder {
 public:
  MonomialOrder(OrderingKind kind, std::size_t nvars) : kind_(kind), n_(nvars) {}

  // > 0 when a is larger than b in the local ordering.
  int compare(const Exp& a, const Exp& b) const {
    if (a.deg != b.deg) return a.deg < b.deg ? 1 : -1;
    if (kind_ == OrderingKind::NegDegRevLex) {
      for (std::size_t i = n_; i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      }
    } else {
      for (std::size_t i = 0; i < n_; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      }
    }
    return 0;
  }
  std::size_t nvars() const { return n_; }

 private:
  OrderingKind kind_;
  std::size_t n_;
};

template <class F>
struct Term {
  Exp m;
  typename F::Elem c;
};

// Terms sorted largest first. Both supported orderings are degree-first,
// so degrees are non-decreasing along the vector.
template <class F>
using EPoly = std::vector<Term<F>>;

template <class F>
std::uint32_t ecart(const EPoly<F>& p) {
  return p.empty() ? 0 : p.back().m.deg - p.front().m.deg;
}

template <class F>
void truncate(EPoly<F>& p, std::optional<std::uint32_t> bound) {
  if (!bound) return;
  auto it = std::find_if(p.begin(), p.end(), [&](const Term<F>& t) { return t.m.deg >= *bound; });
  p.erase(it, p.end());
}

template <class F>
class MoraEngine {
 public:
  MoraEngine(const F& field, const MonomialOrder& order, std::uint64_t max_steps)
      : field_(field), order_(order), max_steps_(max_steps) {}

  /// Works modulo m^N from the start; the result then describes I + m^N.
  /// Must be called before run().
  void impose_bound(std::uint32_t N) { bound_ = N; }

  /// Runs the algorithm. With stop_at_unit, returns as soon as a unit is found.
  void run(std::vector<EPoly<F>> gens, bool stop_at_unit) {
    stop_at_unit_ = stop_at_unit;
    for (auto& g : gens) {
      truncate<F>(g, bound_);
      if (g.empty()) continue;
      make_monic(g);
      insert(std::move(g));
      if (unit_) return;
    }
    while (!pairs_.empty()) {
      const Pair pair = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (!basis_[pair.i].alive || !basis_[pair.j].alive) continue;
      if (bound_ && pair.lcm.deg >= *bound_) continue;
      tick();
      EPoly<F> s = spoly(basis_[pair.i].p, basis_[pair.j].p, pair.lcm);
      EPoly<F> h = normal_form(std::move(s));
      if (h.empty()) continue;
      make_monic(h);
      insert(std::move(h));
      if (unit_) return;
    }
  }

  bool unit() const { return unit_; }
  std::optional<std::uint32_t> truncation_bound() const { return bound_; }
  std::uint64_t steps() const { return steps_; }

  /// Alive elements whose leading monomial is not divisible by that of an
  /// earlier-kept element, sorted largest leading monomial first.
  std::vector<EPoly<F>> minimal_basis() const {
    if (unit_) return {EPoly<F>{Term<F>{Exp{}, field_.one()}}};
    std::vector<const EPoly<F>*> kept;
    std::vector<const Element*> alive;
    for (const auto& el : basis_) {
      if (el.alive) alive.push_back(&el);
    }
    for (std::size_t a = 0; a < alive.size(); ++a) {
      const Exp& lm = alive[a]->p.front().m;
      bool redundant = false;
      for (std::size_t b = 0; b < alive.size() && !redundant; ++b) {
        if (a == b) continue;
        const Exp& other = alive[b]->p.front().m;
        if (divides(other, lm) && (!(other == lm) || b < a)) redundant = true;
      }
      if (!redundant) kept.push_back(&alive[a]->p);
    }
    std::vector<EPoly<F>> out;
    for (auto* p : kept) out.push_back(*p);
    if (bound_) {
      // Monomials of degree bound_ are in the ideal; add the ones the kept
      // leading monomials do not already cover.
      for (const Exp& m : monomials_of_degree(*bound_)) {
        bool covered = false;
        for (auto* p : kept) covered = covered || divides(p->front().m, m);
        if (!covered) out.push_back(EPoly<F>{Term<F>{m, field_.one()}});
      }
    }
    std::sort(out.begin(), out.end(), [&](const EPoly<F>& a, const EPoly<F>& b) {
      return order_.compare(a.front().m, b.front().m) > 0;
    });
    return out;
  }

  /// Number of standard monomials, or nullopt when infinite.
  std::optional<std::uint64_t> count_standard_monomials() const {
    if (unit_) return 0;
    const auto lms = leading_monomials();
    if (!bound_ && !all_pure_powers(lms)) return std::nullopt;
    std::uint64_t count = 0;
    std::uint32_t maxdeg = 0;
    walk_staircase(lms, bound_, count, maxdeg);
    return count;
  }

 private:
  struct Element {
    EPoly<F> p;
    std::uint32_t ecart = 0;
    bool alive = true;
  };
  // sugar is the degree of the homogenised S-polynomial, lcm degree plus
  // the larger ecart; selecting by it keeps high-ecart reductions late.
  struct Pair {
    std::size_t i, j;
    Exp lcm;
    std::uint32_t sugar = 0;
  };
  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
      const int c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c > 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  void tick() {
    if (++steps_ > max_steps_) {
      throw ResourceLimit("standard basis exceeded " + std::to_string(max_steps_) +
                          " reduction steps");
    }
  }

  void make_monic(EPoly<F>& p) const {
    if (F::is_one(p.front().c)) return;
    const auto inv = field_.inv(p.front().c);
    for (auto& t : p) t.c = field_.mul(t.c, inv);
  }

  // h - c * u * g, truncated.
  EPoly<F> sub_mul(const EPoly<F>& h, const typename F::Elem& c, const Exp& u,
                   const EPoly<F>& g) const {
    EPoly<F> out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    const std::uint32_t limit = bound_ ? *bound_ : UINT32_MAX;
    while (i < h.size() || j < g.size()) {
      if (j < g.size()) {
        const Exp gm = mul(u, g[j].m);
        int cmp = i < h.size() ? order_.compare(h[i].m, gm) : -1;
        if (cmp > 0) {
          if (h[i].m.deg >= limit) break;
          out.push_back(h[i++]);
        } else if (cmp < 0) {
          if (gm.deg >= limit) break;
          out.push_back(Term<F>{gm, field_.sub_mul(typename F::Elem(0), c, g[j].c)});
          ++j;
        } else {
          if (gm.deg >= limit) break;
          auto v = field_.sub_mul(h[i].c, c, g[j].c);
          if (!F::is_zero(v)) out.push_back(Term<F>{gm, std::move(v)});
          ++i;
          ++j;
        }
      } else {
        if (h[i].m.deg >= limit) break;
        out.push_back(h[i++]);
      }
    }
    return out;
  }

  EPoly<F> spoly(const EPoly<F>& f, const EPoly<F>& g, const Exp& l) const {
    // Both are monic.
    const Exp uf = quotient(f.front().m, l);
    const Exp ug = quotient(g.front().m, l);
    EPoly<F> scaled;
    scaled.reserve(f.size());
    for (const auto& t : f) {
      Exp m = mul(uf, t.m);
      if (bound_ && m.deg >= *bound_) break;
      scaled.push_back(Term<F>{m, t.c});
    }
    return sub_mul(scaled, field_.one(), ug, g);
  }

  // Mora's weak normal form: reducers with minimal ecart, and the current
  // remainder joins the reducer set whenever the chosen reducer has a
  // larger ecart.
  EPoly<F> normal_form(EPoly<F> h) {
    std::deque<Element> local;
    while (!h.empty()) {
      const Exp& lm = h.front().m;
      const Element* best = nullptr;
      for (const auto& el : basis_) {
        if (el.alive && divides(el.p.front().m, lm) && (!best || el.ecart < best->ecart)) best = &el;
      }
      for (const auto& el : local) {
        if (divides(el.p.front().m, lm) && (!best || el.ecart < best->ecart)) best = &el;
      }
      if (!best) break;
      tick();
      const std::uint32_t eh = ecart(h);
      if (best->ecart > eh) local.push_back(Element{h, eh, true});
      const auto c = F::is_one(best->p.front().c)
                         ? h.front().c
                         : field_.mul(h.front().c, field_.inv(best->p.front().c));
      h = sub_mul(h, c, quotient(best->p.front().m, lm), best->p);
    }
    return h;
  }

  // p = lm(p) * u with u a unit of the local ring exactly when lm(p)
  // divides every term; then (p) = (lm(p)) and the monomial, with ecart 0,
  // is a far better reducer.
  void strip_unit(EPoly<F>& p) const {
    const Exp& lm = p.front().m;
    for (const auto& t : p) {
      if (!divides(lm, t.m)) return;
    }
    p.resize(1);
  }

  void insert(EPoly<F> p) {
    strip_unit(p);
    if (p.front().m.deg == 0) {
      unit_ = true;
      if (stop_at_unit_) return;
    }
    const std::size_t k = basis_.size();
    const Exp& lk = p.front().m;
    const std::uint32_t ek = ecart(p);
    // Gebauer-Moeller chain criterion. It only prunes a generating set of
    // the leading-term syzygies, so it holds for local orderings too (the
    // coprime-lcm criterion does not and is not used).
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (!basis_[it->i].alive || !basis_[it->j].alive) {
        it = pairs_.erase(it);
      } else if (divides(lk, it->lcm) && !(lcm(basis_[it->i].p.front().m, lk) == it->lcm) &&
          !(lcm(basis_[it->j].p.front().m, lk) == it->lcm)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      if (!basis_[i].alive) continue;
      Pair pair{i, k, lcm(basis_[i].p.front().m, lk), 0};
      if (bound_ && pair.lcm.deg >= *bound_) continue;
      pair.sugar = pair.lcm.deg + std::max(basis_[i].ecart, ek);
      fresh.push_back(pair);
    }
    // Among the new pairs keep one per lcm, and none whose lcm is a proper
    // multiple of another new lcm.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
        if (a == b || !divides(fresh[b].lcm, fresh[a].lcm)) continue;
        drop = !(fresh[b].lcm == fresh[a].lcm) || b < a;
      }
      if (!drop) pairs_.insert(fresh[a]);
    }
    basis_.push_back(Element{std::move(p), ek, true});
    if (unit_) {
      pairs_.clear();
      return;
    }
    update_bound();
  }

  std::vector<Exp> leading_monomials() const {
    std::vector<Exp> out;
    for (const auto& el : basis_) {
      if (el.alive) out.push_back(el.p.front().m);
    }
    return out;
  }

  bool all_pure_powers(const std::vector<Exp>& lms) const {
    for (std::size_t v = 0; v < order_.nvars(); ++v) {
      bool found = false;
      for (const auto& m : lms) found = found || (m.e[v] == m.deg && m.deg > 0);
      if (!found) return false;
    }
    return true;
  }

  // Depth-first walk over standard monomials (those not divisible by any
  // leading monomial), optionally below a degree bound.
  void walk_staircase(const std::vector<Exp>& lms, std::optional<std::uint32_t> bound,
                      std::uint64_t& count, std::uint32_t& maxdeg) const {
    Exp cur;
    std::function<void(std::size_t)> visit = [&](std::size_t first_var) {
      if (bound && cur.deg >= *bound) return;
      for (const auto& m : lms) {
        if (divides(m, cur)) return;
      }
      ++count;
      if (count > max_steps_) {
        throw ResourceLimit("staircase larger than " + std::to_string(max_steps_));
      }
      maxdeg = std::max(maxdeg, cur.deg);
      for (std::size_t v = first_var; v < order_.nvars(); ++v) {
        ++cur.e[v];
        ++cur.deg;
        visit(v);
        --cur.e[v];
        --cur.deg;
      }
    };
    visit(0);
  }

  std::vector<Exp> monomials_of_degree(std::uint32_t d) const {
    std::vector<Exp> out;
    Exp cur;
    std::function<void(std::size_t, std::uint32_t)> gen = [&](std::size_t v, std::uint32_t left) {
      if (v + 1 == order_.nvars()) {
        cur.e[v] = static_cast<std::uint16_t>(left);
        cur.deg = d;
        out.push_back(cur);
        cur.e[v] = 0;
        return;
      }
      for (std::uint32_t k = 0; k <= left; ++k) {
        cur.e[v] = static_cast<std::uint16_t>(k);
        gen(v + 1, left - k);
      }
      cur.e[v] = 0;
    };
    if (order_.nvars() > 0) gen(0, d);
    return out;
  }

  void update_bound() {
    const auto lms = leading_monomials();
    if (!bound_ && !all_pure_powers(lms)) return;
    std::uint64_t count = 0;
    std::uint32_t maxdeg = 0;
    walk_staircase(lms, bound_, count, maxdeg);
    const std::uint32_t candidate = maxdeg + 1;
    if (bound_ && candidate >= *bound_) return;
    bound_ = candidate;
    for (auto& el : basis_) {
      if (!el.alive) continue;
      truncate<F>(el.p, bound_);
      if (el.p.empty()) {
        el.alive = false;
      } else {
        el.ecart = ecart(el.p);
      }
    }
  }

  const F& field_;
  MonomialOrder order_;
  std::uint64_t max_steps_;
  std::uint64_t steps_ = 0;
  bool stop_at_unit_ = false;
  bool unit_ = false;
  std::optional<std::uint32_t> bound_;
  std::vector<Element> basis_;
  std::set<Pair, PairLess> pairs_{PairLess{&order_}};
};

}  // namespace singchi::sb::detail
