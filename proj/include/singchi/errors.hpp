#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singchi {

/// Base of every error the engine reports. `kind()` is the stable
/// machine-readable name that ends up in JSON error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message);
  const std::string& kind() const noexcept { return kind_; }

  /// Throws a copy of this error (same dynamic type) whose message is
  /// `context` followed by the original message.
  [[noreturn]] virtual void rethrow_with_context(const std::string& context) const;

 private:
  std::string kind_;
};

#define SINGCHI_DECLARE_ERROR(Name)                                      \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
    [[noreturn]] void rethrow_with_context(const std::string& context)   \
        const override {                                                 \
      throw Name(context + what());                                      \
    }                                                                    \
  }

// Polynomial kernel.
SINGCHI_DECLARE_ERROR(UnknownVariable);
SINGCHI_DECLARE_ERROR(NonDivisible);
SINGCHI_DECLARE_ERROR(EmptyArgs);
SINGCHI_DECLARE_ERROR(ZeroDegree);
// Standard bases.
SINGCHI_DECLARE_ERROR(ResourceLimit);
SINGCHI_DECLARE_ERROR(BadPrime);
// Milnor numbers.
SINGCHI_DECLARE_ERROR(NonIsolated);
SINGCHI_DECLARE_ERROR(NotAtOrigin);
SINGCHI_DECLARE_ERROR(NotICIS);
SINGCHI_DECLARE_ERROR(NotZeroDimensional);
// Map germs and multiple point spaces.
SINGCHI_DECLARE_ERROR(NotNormalForm);
SINGCHI_DECLARE_ERROR(NotCorankOne);
// Euler characteristic formulas.
SINGCHI_DECLARE_ERROR(NonIntegralChi);
SINGCHI_DECLARE_ERROR(NegativeMuI);
// Catalog and input handling.
SINGCHI_DECLARE_ERROR(UnknownEntry);
SINGCHI_DECLARE_ERROR(BadParams);
SINGCHI_DECLARE_ERROR(BadInput);

#undef SINGCHI_DECLARE_ERROR

/// Parse failure in the polynomial language; `position()` is a 0-based
/// byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace singchi
