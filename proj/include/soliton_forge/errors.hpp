#pragma once

#include <stdexcept>
#include <string>

namespace sforge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

struct DegenerateFormError : Error {
  using Error::Error;
};

struct NotSymmetricError : Error {
  using Error::Error;
};

struct NotOrthonormalError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct UnknownFamilyError : Error {
  using Error::Error;
};

struct ParamOutOfRangeError : Error {
  using Error::Error;
};

struct PredicateNotSatisfiedError : Error {
  using Error::Error;
};

struct GoldenMismatchError : Error {
  using Error::Error;
};

}  // namespace sforge
