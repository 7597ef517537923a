#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdepth {

enum class ErrorKind {
  MalformedInput,
  RingMismatch,
  UndefinedModule,  // S/I with I the unit ideal is the zero module
  RegularityViolation,
  CapExceeded,
  SquarefreeRequired,
  NotAFace,
  OutOfRange,
  EmptyInput,
  Internal,  // an always-on oracle check failed
};

/// Stable kebab-case tag, used in machine-readable error lines.
std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace mdepth
