#ifndef EQRES_ERROR_HPP
#define EQRES_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqres {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (size/degree mismatch, bad partition...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Text that does not conform to the polynomial grammar or file format.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), message_(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

// Exact division left a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

// A polynomial system failed the S_n-equivariance check.
class NotEquivariant : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree produced different values.
class Mismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace eqres

#endif
