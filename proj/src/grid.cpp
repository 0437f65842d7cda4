#include "tpwave/grid.hpp"

#include <cmath>
#include <string>

#include "tpwave/errors.hpp"

namespace tpwave {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonHermitianInput: return "NonHermitianInput";
    case ErrorKind::MeanNotZero: return "MeanNotZero";
    case ErrorKind::NotMeanFree: return "NotMeanFree";
    case ErrorKind::OddIncompatible: return "OddIncompatible";
    case ErrorKind::ExtensionTraceMismatch: return "ExtensionTraceMismatch";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::ExponentViolation: return "ExponentViolation";
    case ErrorKind::Config: return "Config";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

void GridSpec::validate() const {
  auto bad_count = [](int n) { return n < 4 || n % 2 != 0; };
  if (bad_count(n_t)) {
    throw Error(ErrorKind::InvalidGrid, "n_t must be even and >= 4, got " + std::to_string(n_t));
  }
  if (bad_count(n_x)) {
    throw Error(ErrorKind::InvalidGrid, "n_x must be even and >= 4, got " + std::to_string(n_x));
  }
  if (!(box_len > 0.0) || !std::isfinite(box_len)) {
    throw Error(ErrorKind::InvalidGrid, "box_len must be positive");
  }
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw Error(ErrorKind::InvalidGrid, "period must be positive");
  }
}

double GridSpec::time_freq(int a) const { return time_fundamental() * signed_mode(a, n_t); }

double GridSpec::space_freq(int i) const { return space_fundamental() * signed_mode(i, n_x); }

}  // namespace tpwave
