#include "atorsion/error.hpp"

namespace atorsion {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::field: return "field";
    case ErrorKind::range: return "range";
    case ErrorKind::size: return "size";
    case ErrorKind::parse: return "parse";
    case ErrorKind::structure: return "structure";
    case ErrorKind::validation: return "validation";
    case ErrorKind::inconsistency: return "inconsistency";
    case ErrorKind::not_found: return "not-found";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace atorsion
