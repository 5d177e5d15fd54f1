#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plrs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ValidationCode { EmptyVector, NegativeCoefficient, LeadingZero, TrailingZero };

class ValidationError : public Error {
 public:
  ValidationError(ValidationCode code, std::size_t index, const std::string& what)
      : Error(what), code_(code), index_(index) {}

  ValidationCode code() const noexcept { return code_; }
  /// 1-based position of the offending coefficient (0 for EmptyVector).
  std::size_t index() const noexcept { return index_; }

 private:
  ValidationCode code_;
  std::size_t index_;
};

/// A requested oracle or brute-force bound exceeds its configured budget.
class CapError : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace plrs
