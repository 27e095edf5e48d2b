#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace preop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. position is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), message_(message), position_(position) {}

  // The message without the position suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

// Well-formed request outside an operation's domain: slot out of range,
// size mismatch, flavor violation, unsupported instance.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration or sweep whose size exceeds the configured cap.
class BudgetError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace preop
