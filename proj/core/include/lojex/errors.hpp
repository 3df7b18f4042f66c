#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lojex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text, weight lists, or other user input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation ran out of its configured budget before reaching a verdict.
/// Distinct from a negative answer.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug or corrupted input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace lojex
