#pragma once
#include <stdexcept>
#include <string>

namespace andre {

// Base class for all domain errors raised by this library.  The CLI maps
// these to exit code 1; anything else escaping is a bug.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Field construction.
struct NotPrimePower : Error {
  using Error::Error;
};
struct TooSmall : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};

// Permutations / group machinery.
struct DegreeMismatch : Error {
  using Error::Error;
};
struct SizeExceeded : Error {
  using Error::Error;
};

// Plane enumeration / counting.
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct NonIntegerBurnside : Error {
  using Error::Error;
};
struct StateSpaceTooLarge : Error {
  using Error::Error;
};

}  // namespace andre
