#pragma once

#include <stdexcept>
#include <string>

namespace orbital {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A stated precondition of an operation does not hold (e.g. rank() on an
// intransitive group, two_closure() on a group that is not 3/2-transitive).
struct PreconditionError : Error {
  using Error::Error;
};

// An enumeration or search exceeded a configured resource cap.
struct OverCapError : Error {
  using Error::Error;
};

// A tuple-space budget was exceeded (k_orbits / k_closure).
struct OverBudgetError : Error {
  using Error::Error;
};

// Input that must be a coherent configuration is not one.
struct IncoherentInputError : Error {
  using Error::Error;
};

// Degrees of two objects that must live on the same point set differ.
struct DegreeMismatchError : Error {
  using Error::Error;
};

// Malformed textual input (group files, scheme files, psi files).
struct ParseError : Error {
  using Error::Error;
};

// Bad constructor parameters in the group zoo.
struct NotPrimeError : Error {
  using Error::Error;
};
struct BadParametersError : Error {
  using Error::Error;
};
struct SingularMatrixError : Error {
  using Error::Error;
};

// No 2-element generating set exists.
struct NoGeneratingPairError : Error {
  using Error::Error;
};

// No base of the requested size yields a 1-regular point extension.
struct BaseNotFoundError : Error {
  using Error::Error;
};

}  // namespace orbital
