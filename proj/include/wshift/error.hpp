#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wshift {

enum class ErrorKind {
  kIndexBeyondPrefix,
  kExpressionDomain,
  kNotHyponormalAt,
  kPreconditionViolation,
  kNegativeD,
  kNonSymmetric,
  kParse,
  kDomain,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is a ShiftError. `index` carries the sequence index
// (1-based) or the character position in DSL text, depending on the kind.
class ShiftError : public std::runtime_error {
 public:
  ShiftError(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace wshift
