#pragma once

#include <stdexcept>
#include <string>

namespace hashchain {

enum class ErrorKind {
  invalid_parameters,
  pattern_too_short,
  empty_pattern,
  buffer_too_small,
  io,
  correctness,
};

/// Base error for everything thrown by the library. `kind()` lets callers
/// map failures onto exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hashchain
