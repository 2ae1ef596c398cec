#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace singchi::poly {

/// Ordered list of distinct variable names. Cheap to copy; two rings are
/// equal when their variable lists are equal.
class Ring {
 public:
  Ring();
  explicit Ring(std::vector<std::string> vars);

  std::size_t size() const noexcept { return vars_->size(); }
  const std::string& var(std::size_t i) const { return (*vars_)[i]; }
  const std::vector<std::string>& vars() const noexcept { return *vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  /// Index of `name`, throwing UnknownVariable when absent.
  std::size_t require(std::string_view name) const;

  /// Same ring with `names` appended (names already present are skipped).
  Ring extended(const std::vector<std::string>& names) const;
  /// Same ring with the given variable removed.
  Ring without(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

/// True for names matching [a-z][a-zA-Z0-9_]*.
bool is_identifier(std::string_view name);

/// First name of the form base, base1, base2, ... not in `taken`.
std::string fresh_name(const std::string& base, const std::vector<std::string>& taken);

}  // namespace singchi::poly
