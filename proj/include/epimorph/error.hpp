#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace epimorph {

enum class ErrorKind {
  invalid_argument,
  not_in_language,
  insufficient_context,
  alphabet_mismatch,
  precondition_violation,
  parse_error,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the library. `kind()` tells callers
/// which contract was broken; the message carries the specifics.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace epimorph
