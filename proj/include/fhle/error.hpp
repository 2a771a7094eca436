#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fhle {

enum class ErrorKind {
  InvalidParameter,
  NonPositiveArgument,
  OutOfRange,
  PoleOrNegativeArgument,
  DimensionTooSmall,
  NotSupercritical,
  SingularEvaluation,
  NonConvergent,
  UnsupportedOrder,
  UnsupportedDimension,
  GridTooCoarse,
  TailUnspecified,
  ExtrapolationUnstable,
  AliasingDetected,
  DomainExceeded,
  DimensionConditionViolated,
  NonIntegrable,
  ExponentZero,
  IoFailure,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::PoleOrNegativeArgument: return "PoleOrNegativeArgument";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::NotSupercritical: return "NotSupercritical";
    case ErrorKind::SingularEvaluation: return "SingularEvaluation";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::TailUnspecified: return "TailUnspecified";
    case ErrorKind::ExtrapolationUnstable: return "ExtrapolationUnstable";
    case ErrorKind::AliasingDetected: return "AliasingDetected";
    case ErrorKind::DomainExceeded: return "DomainExceeded";
    case ErrorKind::DimensionConditionViolated: return "DimensionConditionViolated";
    case ErrorKind::NonIntegrable: return "NonIntegrable";
    case ErrorKind::ExponentZero: return "ExponentZero";
    case ErrorKind::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace fhle
