#pragma once

#include <stdexcept>
#include <string>

namespace fusscat {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs outside an operation's domain (bad parameters, non-Fuss-Catalan
/// path handed to an inverse, unmet precondition).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A vertex address that does not resolve inside the given tree.
class AddressError : public Error {
 public:
  using Error::Error;
};

/// Malformed tree structure or an illegal structural edit.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Text that does not parse against the canonical encodings.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The instance would exceed the configured resource cap.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// Two exact routes to the same quantity disagreed. Should never fire.
class ArithmeticIdentityError : public Error {
 public:
  using Error::Error;
};

}  // namespace fusscat
