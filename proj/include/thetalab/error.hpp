#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thetalab {

enum class ErrorKind {
  kNotPrime,
  kOverflow,
  kDivisionByZero,
  kOrderUnavailable,
  kLoopRejected,
  kIndexOutOfRange,
  kComplexityRefused,
  kPreconditionViolated,
  kConvergenceFailure,
  kGapNotReached,
  kNoEdges,
  kHandleOrthogonalToVector,
  kRepInvalid,
  kDimensionMismatch,
  kNotACliqueCover,
  kUnsupportedPattern,
  kParse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kOverflow: return "Overflow";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kOrderUnavailable: return "OrderUnavailable";
    case ErrorKind::kLoopRejected: return "LoopRejected";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kComplexityRefused: return "ComplexityRefused";
    case ErrorKind::kPreconditionViolated: return "PreconditionViolated";
    case ErrorKind::kConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::kGapNotReached: return "GapNotReached";
    case ErrorKind::kNoEdges: return "NoEdges";
    case ErrorKind::kHandleOrthogonalToVector: return "HandleOrthogonalToVector";
    case ErrorKind::kRepInvalid: return "RepInvalid";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kNotACliqueCover: return "NotACliqueCover";
    case ErrorKind::kUnsupportedPattern: return "UnsupportedPattern";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace thetalab
