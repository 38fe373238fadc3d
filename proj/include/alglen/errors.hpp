#pragma once

#include <stdexcept>
#include <string>

namespace alglen {

/// Base class for every failure this library reports.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  using Error::Error;
};
struct FieldMismatch : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotAssociative : Error {
  using Error::Error;
};
struct NotUnital : Error {
  using Error::Error;
};
struct AlgebraMismatch : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};
struct NotGenerating : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct InfiniteField : Error {
  using Error::Error;
};
struct BadSize : Error {
  using Error::Error;
};
struct BadM : Error {
  using Error::Error;
};
struct BadDims : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace alglen
