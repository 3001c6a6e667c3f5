#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fock {

/// Raised when a numerical routine cannot meet its accuracy contract
/// (solver non-convergence, quadrature refinement disagreement, aliasing).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symbol mini-language error; `position()` is the 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        message_(message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace fock
