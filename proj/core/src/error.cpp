#include "mdepth/error.hpp"

namespace mdepth {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "malformed-input";
    case ErrorKind::RingMismatch: return "ring-mismatch";
    case ErrorKind::UndefinedModule: return "undefined-module";
    case ErrorKind::RegularityViolation: return "regularity-violation";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::SquarefreeRequired: return "squarefree-required";
    case ErrorKind::NotAFace: return "not-a-face";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace mdepth
