#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ceplab {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a precondition (bad arity, wrong carrier, malformed request).
class UsageError : public Error {
 public:
  using Error::Error;
};

// A size cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Input data (a table, a frame file) is inconsistent.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A postcondition scan failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::string const& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ceplab
