#pragma once

#include <stdexcept>
#include <string>

namespace hawkes {

// Root of the library error hierarchy. CLI maps DataError to exit code 3
// and any other Error to exit code 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Problems with the input data rather than with the computation.
struct DataError : Error {
  using Error::Error;
};

struct NonPositiveParameter : Error {
  using Error::Error;
};

struct StabilityViolation : Error {
  using Error::Error;
};

struct TimeOutOfRange : Error {
  using Error::Error;
};

struct TimeOrderViolation : Error {
  using Error::Error;
};

struct NegativeTimeStep : Error {
  using Error::Error;
};

struct BadWindow : Error {
  using Error::Error;
};

struct BadStep : Error {
  using Error::Error;
};

struct NumericalUnderflow : Error {
  using Error::Error;
};

struct SeedExhausted : Error {
  using Error::Error;
};

struct NonMonotoneIntensity : Error {
  using Error::Error;
};

struct EmptyWindow : DataError {
  using DataError::DataError;
};

struct EmptyGrid : DataError {
  using DataError::DataError;
};

struct EmptySession : DataError {
  using DataError::DataError;
};

struct DegenerateData : DataError {
  using DataError::DataError;
};

// Carries the 1-based line number of the offending record.
struct ParseError : DataError {
  ParseError(const std::string& path, std::size_t line, const std::string& what)
      : DataError(path + ":" + std::to_string(line) + ": " + what), line_number(line) {}
  std::size_t line_number;
};

}  // namespace hawkes
