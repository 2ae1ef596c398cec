#include <algorithm>
#include <numeric>

#include "singchi/errors.hpp"
#include "singchi/mps/multiple_points.hpp"

namespace singchi::mps {

MapGerm validate_corank1(const std::vector<Polynomial>& components, std::size_t n) {
  if (n < 1) throw NotNormalForm("source dimension must be at least 1");
  if (components.size() != n + 1) {
    throw NotNormalForm("expected " + std::to_string(n + 1) + " components, got " +
                        std::to_string(components.size()));
  }
  const Ring ring = components.front().ring();
  if (ring.size() != n) {
    throw NotNormalForm("expected " + std::to_string(n) + " source variables, got " +
                        std::to_string(ring.size()));
  }
  MapGerm f;
  f.n = n;
  f.ring = ring;
  for (const auto& c : components) f.components.push_back(c.in_ring(ring));

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(f.components[i] == Polynomial::variable(ring, ring.var(i)))) {
      throw NotNormalForm("component " + std::to_string(i + 1) + " is not the coordinate " +
                          ring.var(i));
    }
  }
  for (const Polynomial* g : {&f.p(), &f.q()}) {
    if (g->constant_term() != 0) throw NotNormalForm("f(0) != 0");
  }
  const std::size_t z = n - 1;
  for (const Polynomial* g : {&f.p(), &f.q()}) {
    if (g->derivative(z).constant_term() != 0) {
      throw NotCorankOne("differential at 0 has rank n; " + poly::to_string(*g) +
                         " has a linear term in " + ring.var(z));
    }
  }
  return f;
}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw BadParams("partition must have at least one part");
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end()) {
    throw BadParams("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end());
  k_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

}  // namespace singchi::mps
