#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpwave {

enum class ErrorKind {
  InvalidGrid,
  InvalidArgument,
  NonHermitianInput,
  MeanNotZero,
  NotMeanFree,
  OddIncompatible,
  ExtensionTraceMismatch,
  GridTooCoarse,
  ExponentViolation,
  Config,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind; the CLI maps kinds to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tpwave
