#pragma once

#include <stdexcept>
#include <string>

namespace pzeta {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (non-prime where a prime is
/// required, malformed permutation, non-normal subgroup, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation was refused because its input exceeds a configured bound.
class SizeRefusal : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pzeta
