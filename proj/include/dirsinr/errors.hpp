#pragma once

#include <stdexcept>
#include <string>

namespace dirsinr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric argument lies outside its documented range.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Two points that must be distinct coincide (zero distance, undefined bearing).
class DegenerateGeometry : public Error {
 public:
  using Error::Error;
};

/// The closed-form model is evaluated outside the region where it is defined.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

}  // namespace dirsinr
