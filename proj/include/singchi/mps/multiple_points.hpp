#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "singchi/milnor/milnor.hpp"
#include "singchi/sb/standard_basis.hpp"

namespace singchi::mps {

using poly::Polynomial;
using poly::Ring;
using sb::IdealPresentation;

/// Corank-1 map germ (C^n,0) -> (C^{n+1},0) in normal form
/// (x_1, ..., x_{n-1}, p(x,z), q(x,z)). The ring lists x_1..x_{n-1}, z.
struct MapGerm {
  std::size_t n = 0;
  Ring ring;
  std::vector<Polynomial> components;

  const std::string& corank_var() const { return ring.var(n - 1); }
  const Polynomial& p() const { return components[n - 1]; }
  const Polynomial& q() const { return components[n]; }
};

/// Checks the normal-form shape and that the differential at 0 has rank
/// n-1. The components must live in a ring of exactly n variables, the
/// last of which is the kernel direction z.
/// Throws NotNormalForm (naming the failed condition) or NotCorankOne.
MapGerm validate_corank1(const std::vector<Polynomial>& components, std::size_t n);

/// Multiset of positive integers, stored ascending.
class Partition {
 public:
  explicit Partition(std::vector<unsigned> parts);
  static Partition ones(unsigned k) { return Partition(std::vector<unsigned>(k, 1)); }

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  unsigned k() const noexcept { return k_; }
  std::string to_string() const;  // "(1,2)"

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned k_ = 0;
};

/// Names z1..zk (based on the germ's kernel variable) used for the k copies.
std::vector<std::string> copy_variables(const MapGerm& f, unsigned k);

/// D^k(f) in the ring (x_1..x_{n-1}, z1..zk): the divided differences
/// g[z1..zj] for g in {p, q} and j = 2..k, p's first. Requires k >= 2.
IdealPresentation dk_ideal(const MapGerm& f, unsigned k);

/// Restriction of D^k(f) to the fixed points of the permutation with cycle
/// type P. Cycles occupy consecutive blocks of z1..zk in ascending part
/// order and each block keeps its first variable; the generators are the
/// confluent divided differences with the block variables repeated.
IdealPresentation dk_partition_ideal(const MapGerm& f, unsigned k, const Partition& P);

/// 1 when D^k(f) is a non-empty germ, 0 otherwise.
int beta_k(const MapGerm& f, unsigned k, const sb::EngineOptions& options = {});

/// Milnor number of one multiple point space with its audit record.
struct SpaceMilnor {
  std::string space;  // "D2", "D2|H", "D3", "D3|H1"
  milnor::MilnorResult result;
};

struct InvariantTuple {
  std::uint64_t mu_d2 = 0;
  std::uint64_t mu_d2H = 0;
  std::uint64_t mu_d3 = 0;
  std::uint64_t mu_d3H1 = 0;
  int beta2 = 0;
  int beta3 = 0;
  int beta4 = 0;
  std::uint64_t Q = 0;          // quadruple points of a stable perturbation
  std::uint64_t d4_points = 0;  // points in the Milnor fibre of D^4, i.e. 4! * Q

  std::vector<SpaceMilnor> routes;

  bool operator==(const InvariantTuple& o) const {
    return mu_d2 == o.mu_d2 && mu_d2H == o.mu_d2H && mu_d3 == o.mu_d3 && mu_d3H1 == o.mu_d3H1 &&
           beta2 == o.beta2 && beta3 == o.beta3 && beta4 == o.beta4 && Q == o.Q;
  }
};

/// Invariants of a germ with n = 3: Milnor numbers of D^2, D^2|H (P=(2)),
/// D^3, D^3|H_1 (P=(2,1)), the emptiness flags beta_2..beta_4, and the
/// number Q of quadruple points. D^4 is zero-dimensional and S_4 permutes
/// the points of its Milnor fibre freely, so that fibre has 4! * Q points.
/// Errors raised while handling one space are re-thrown with the space's
/// name prefixed.
InvariantTuple invariant_tuple(const MapGerm& f, std::uint64_t seed,
                               const milnor::MilnorOptions& options = {});

}  // namespace singchi::mps
