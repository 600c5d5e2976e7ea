#pragma once

#include <stdexcept>
#include <string>

namespace symsq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a modular inverse is requested for a non-unit.
class NonInvertible : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the domain where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two cyclotomic numbers of different orders were compared.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure did not reach its requested tolerance.
class NotConverged : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a report or cache file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace symsq
