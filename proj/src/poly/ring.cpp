#include "singchi/poly/ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "singchi/errors.hpp"

namespace singchi::poly {

Ring::Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}

Ring::Ring(std::vector<std::string> vars) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!is_identifier(vars[i])) {
      throw BadInput("invalid variable name '" + vars[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[i] == vars[j]) throw BadInput("duplicate variable '" + vars[i] + "'");
    }
  }
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  const auto& v = *vars_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw UnknownVariable(std::string(name));
}

Ring Ring::extended(const std::vector<std::string>& names) const {
  std::vector<std::string> v = *vars_;
  for (const auto& n : names) {
    if (std::find(v.begin(), v.end(), n) == v.end()) v.push_back(n);
  }
  return Ring(std::move(v));
}

Ring Ring::without(std::string_view name) const {
  std::vector<std::string> v;
  for (const auto& n : *vars_) {
    if (n != name) v.push_back(n);
  }
  return Ring(std::move(v));
}

bool is_identifier(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
  auto free = [&](const std::string& n) {
    return std::find(taken.begin(), taken.end(), n) == taken.end();
  };
  if (free(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (free(candidate)) return candidate;
  }
}

}  // namespace singchi::poly
