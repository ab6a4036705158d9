#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matchroot {

/// Raised when a caller breaks an operation's documented precondition.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        reason_(what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  /// The message without the offset suffix.
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
  std::size_t offset_;
};

/// An exponential routine was asked to run above its hard size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input does not satisfy the premise a closed formula needs.
class PremiseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A property that the theory guarantees was observed to fail.
class InvariantBreach : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace matchroot
