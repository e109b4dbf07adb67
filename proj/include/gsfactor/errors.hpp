#pragma once

#include <stdexcept>
#include <string>

namespace gsf {

// Base for every error raised by the library. The C API maps each subclass
// onto a stable status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad construction parameters (even p, composite p, k < 1, size limits).
class FieldError : public Error {
 public:
  using Error::Error;
};

// Operation undefined for its argument: zero divisor, zero polynomial,
// mismatched fields, non-monic decomposition base.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Caller violated a documented precondition (e.g. c outside the square-pair set).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Enumeration refused because the field is larger than the configured limit.
class GuardError : public Error {
 public:
  using Error::Error;
};

// Malformed field spec or element literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A mathematical identity that must hold failed. Never expected to fire; the
// message names the identity.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsf
