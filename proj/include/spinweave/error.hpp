#pragma once

#include <stdexcept>
#include <string>

namespace spinweave {

enum class ErrorKind {
  invalid_size,
  invalid_argument,
  invalid_site,
  dimension_mismatch,
  malformed_input,
  numerical,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_size: return "invalid size";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::invalid_site: return "invalid site";
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::malformed_input: return "malformed input";
    case ErrorKind::numerical: return "numerical failure";
  }
  return "unknown";
}

/// Single exception type for the library; `kind()` distinguishes contract
/// violations (bad input) from numerical failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spinweave
