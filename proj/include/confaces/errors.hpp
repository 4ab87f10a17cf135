#ifndef CONFACES_ERRORS_HPP
#define CONFACES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace confaces {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed rational string, system file, or CLI argument.
struct ParseError : Error {
  using Error::Error;
};

/// Vector/matrix dimensions disagree or are out of range.
struct DimensionError : Error {
  using Error::Error;
};

/// A point handed to classify_point lies outside the polyhedron P.
struct OutsidePolyhedronError : Error {
  using Error::Error;
};

/// A requested computation exceeds the configured size or work guard.
struct CapacityError : Error {
  using Error::Error;
};

/// An operation was called on inputs that violate its stated precondition.
struct PreconditionError : Error {
  using Error::Error;
};

/// A custom polyhedron fixture is not invariant under one of the matrices.
struct InvarianceError : Error {
  using Error::Error;
};

enum class ValidationKind {
  DimensionMismatch,
  FixedVectorViolated,  // some row sum differs from 1
  SeminormExceeded,     // induced seminorm > 1
};

/// Structured rejection from validate_system: names the first offending
/// matrix and the violated condition.
struct ValidationError : Error {
  ValidationError(std::string msg, int index, ValidationKind k,
                  std::string seminorm_value = {})
      : Error(std::move(msg)),
        matrix_index(index),
        kind(k),
        seminorm(std::move(seminorm_value)) {}

  int matrix_index;
  ValidationKind kind;
  std::string seminorm;  // exact value as a string, when kind is SeminormExceeded
};

}  // namespace confaces

#endif  // CONFACES_ERRORS_HPP
