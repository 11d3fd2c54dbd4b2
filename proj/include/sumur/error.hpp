#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumur {

enum class ErrorKind {
  NonFinite,
  NotSquare,
  DimensionMismatch,
  NotHermitian,
  NotNormalized,
  DensityNotHermitian,
  DensityBadTrace,
  DensityNegative,
  NotPSD,
  NegativeVariance,
  ImaginaryExpectation,
  NoConvergence,
  BlochVectorTooLong,
  NTooSmall,
  IdentityViolated,
  UnknownFamily,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  bool is_density_error() const noexcept {
    return kind_ == ErrorKind::DensityNotHermitian || kind_ == ErrorKind::DensityBadTrace ||
           kind_ == ErrorKind::DensityNegative;
  }

 private:
  ErrorKind kind_;
};

}  // namespace sumur
