#pragma once

#include <stdexcept>
#include <string>

namespace atorsion {

enum class ErrorKind {
  dimension,      // shape or index problems
  field,          // bad field data, mismatched fields
  range,          // argument outside the documented domain
  size,           // enumeration guard exceeded
  parse,          // malformed input text
  structure,      // ill-formed complex or graph
  validation,     // a checked mathematical property does not hold
  inconsistency,  // data that is locally fine but globally contradictory
  not_found,      // exhausted search
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure in the library is reported through this exception.  The
/// message is a single line so it can be forwarded verbatim by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace atorsion
