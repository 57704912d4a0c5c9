#include "wshift/error.hpp"

namespace wshift {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIndexBeyondPrefix: return "IndexBeyondPrefix";
    case ErrorKind::kExpressionDomain: return "ExpressionDomainError";
    case ErrorKind::kNotHyponormalAt: return "NotHyponormalAt";
    case ErrorKind::kPreconditionViolation: return "PreconditionViolation";
    case ErrorKind::kNegativeD: return "NegativeD";
    case ErrorKind::kNonSymmetric: return "NonSymmetric";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kDomain: return "DomainError";
  }
  return "Unknown";
}

ShiftError::ShiftError(ErrorKind kind, const std::string& message,
                       std::optional<std::size_t> index)
    : std::runtime_error(message), kind_(kind), index_(index) {}

}  // namespace wshift
