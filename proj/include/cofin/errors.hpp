#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cofin {

// Precondition/domain failures. The CLI reports all of these with exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MonotonicityViolation : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class EndpointNotFixed : public Error {
 public:
  using Error::Error;
};

class DuplicatePoint : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class NotGroupHClass : public Error {
 public:
  using Error::Error;
};

class DefectMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed element text; position is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownSuite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cofin
