#include "singchi/errors.hpp"

#include <utility>

namespace singchi {

Error::Error(std::string kind, const std::string& message)
    : std::runtime_error(message), kind_(std::move(kind)) {}

void Error::rethrow_with_context(const std::string& context) const {
  throw Error(kind_, context + what());
}

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : Error("SyntaxError",
            "at position " + std::to_string(position) + ": " + message),
      position_(position) {}

}  // namespace singchi
