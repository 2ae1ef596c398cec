#include "singchi/mps/multiple_points.hpp"

#include <algorithm>

#include "singchi/errors.hpp"
#include "singchi/poly/operations.hpp"

namespace singchi::mps {

namespace {

std::vector<std::string> base_variables(const MapGerm& f) {
  std::vector<std::string> vars(f.ring.vars().begin(), f.ring.vars().end() - 1);
  return vars;
}

// Generators g[a_1..a_j], j = 2..k, for g = p then q, in `ring`.
IdealPresentation divided_difference_ideal(const MapGerm& f, const std::vector<std::string>& args,
                                           const Ring& ring) {
  std::vector<Polynomial> gens;
  for (const Polynomial* g : {&f.p(), &f.q()}) {
    for (std::size_t j = 2; j <= args.size(); ++j) {
      gens.push_back(poly::divided_difference(*g, f.corank_var(),
                                              std::span<const std::string>(args.data(), j), ring));
    }
  }
  return IdealPresentation(ring, std::move(gens));
}

template <class Fn>
auto tagged(const std::string& space, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    e.rethrow_with_context(space + ": ");
  }
  throw;  // not reached
}

}  // namespace

std::vector<std::string> copy_variables(const MapGerm& f, unsigned k) {
  std::vector<std::string> taken = base_variables(f);
  std::vector<std::string> out;
  for (unsigned i = 1; i <= k; ++i) {
    std::string name = f.corank_var() + std::to_string(i);
    if (std::find(taken.begin(), taken.end(), name) != taken.end()) {
      name = poly::fresh_name(name + "_", taken);
    }
    taken.push_back(name);
    out.push_back(name);
  }
  return out;
}

IdealPresentation dk_ideal(const MapGerm& f, unsigned k) {
  return dk_partition_ideal(f, k, Partition::ones(k));
}

IdealPresentation dk_partition_ideal(const MapGerm& f, unsigned k, const Partition& P) {
  if (k < 2) throw BadParams("multiple point spaces need k >= 2");
  if (P.k() != k) throw BadParams("partition " + P.to_string() + " is not a partition of " + std::to_string(k));
  const auto copies = copy_variables(f, k);
  std::vector<std::string> ring_vars = base_variables(f);
  std::vector<std::string> args;
  std::size_t block_start = 0;
  for (unsigned part : P.parts()) {
    ring_vars.push_back(copies[block_start]);
    args.insert(args.end(), part, copies[block_start]);
    block_start += part;
  }
  return divided_difference_ideal(f, args, Ring(ring_vars));
}

int beta_k(const MapGerm& f, unsigned k, const sb::EngineOptions& options) {
  return sb::is_unit_ideal(dk_ideal(f, k), options) ? 0 : 1;
}

InvariantTuple invariant_tuple(const MapGerm& f, std::uint64_t seed,
                               const milnor::MilnorOptions& options) {
  if (f.n != 3) throw BadInput("invariant tuple requires n = 3, got n = " + std::to_string(f.n));
  InvariantTuple t;
  auto mu = [&](const std::string& space, unsigned k, const Partition& P) {
    return tagged(space, [&] {
      auto r = milnor::icis_milnor(dk_partition_ideal(f, k, P), seed, options);
      t.routes.push_back(SpaceMilnor{space, r});
      return r.mu;
    });
  };
  t.beta2 = tagged("D2", [&] { return beta_k(f, 2, options.engine); });
  t.beta3 = tagged("D3", [&] { return beta_k(f, 3, options.engine); });
  t.mu_d2 = mu("D2", 2, Partition::ones(2));
  t.mu_d2H = mu("D2|H", 2, Partition({2}));
  t.mu_d3 = mu("D3", 3, Partition::ones(3));
  t.mu_d3H1 = mu("D3|H1", 3, Partition({2, 1}));
  t.d4_points = tagged("D4", [&] { return milnor::point_count(dk_ideal(f, 4), options); });
  if (t.d4_points % 24 != 0) {
    throw NotICIS("D4: Milnor fibre has " + std::to_string(t.d4_points) +
                  " points, which is not a union of free S_4-orbits");
  }
  t.Q = t.d4_points / 24;
  t.beta4 = t.d4_points > 0 ? 1 : 0;
  return t;
}

}  // namespace singchi::mps
