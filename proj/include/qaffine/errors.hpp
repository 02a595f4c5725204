#pragma once

#include <stdexcept>
#include <string>

namespace qaffine {

// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class OrderExceeded : public Error {
 public:
  using Error::Error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class NotReduced : public Error {
 public:
  using Error::Error;
};

class NotRegularDominant : public Error {
 public:
  using Error::Error;
};

class NotStabilized : public Error {
 public:
  using Error::Error;
};

class ProfileMismatch : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree did not. Carries a human readable location.
class IdentityFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace qaffine
