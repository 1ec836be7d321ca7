#pragma once

#include <stdexcept>
#include <string>

namespace sympindex {

/* Base class for every library error. */
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Malformed or out-of-domain input (CLI exit code 2). */
struct InputError : Error {
  using Error::Error;
};

/* A comparison could not be decided within the declared approximation error
 * of the irrational quantities involved. */
struct PrecisionExhausted : InputError {
  using InputError::InputError;
};

struct NotSymplectic : InputError {
  using InputError::InputError;
};

struct NonGenericSpectrum : InputError {
  using InputError::InputError;
};

struct DomainBelowMin : InputError {
  using InputError::InputError;
};

struct DegenerateWithoutTable : InputError {
  using InputError::InputError;
};

struct PeriodUndetermined : InputError {
  using InputError::InputError;
};

struct MeanIndexNonpositive : InputError {
  using InputError::InputError;
};

/* Search outcome, not an input problem (CLI exit code 1). */
struct NoTupleFound : Error {
  using Error::Error;
};

}  // namespace sympindex
