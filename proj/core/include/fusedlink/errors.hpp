#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fusedlink {

/// Malformed braid-word text. `column` is the 1-based character offset of
/// the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : std::runtime_error(message + " (column " + std::to_string(column) + ")"),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Raised by every operation whose result is only justified for classical
/// links. Closures carrying virtual crossings between components are outside
/// what linking numbers decide.
class NonClassicalInput : public std::invalid_argument {
 public:
  explicit NonClassicalInput(const std::string& what)
      : std::invalid_argument(
            "non-classical input: " + what +
            "; fused equivalence of links with virtual crossings is not decided by this tool "
            "(e.g. the closure of s1 t1 S1 t1 has linking number 0 but is not known to be "
            "fused isotopic to the 2-component unlink)") {}
};

/// A move application that does not match the word it is applied to.
class InvalidMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rewrite trace failed to replay.
class TraceError : public std::runtime_error {
 public:
  TraceError(std::size_t step, const std::string& reason)
      : std::runtime_error("trace step " + std::to_string(step) + ": " + reason),
        step_(step),
        reason_(reason) {}

  /// 0-based index of the failing move; equals the move count when the
  /// final-word comparison failed.
  std::size_t step() const noexcept { return step_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t step_;
  std::string reason_;
};

/// A between-component signed crossing sum came out odd where an integral
/// linking number is required.
class OddLinkingSum : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fusedlink
