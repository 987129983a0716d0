#pragma once

#include <stdexcept>
#include <string>

namespace jinv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Jordan element with det = 0 has no inverse.
struct SingularElement : Error {
  using Error::Error;
};

// Group word applied to an element of a different model.
struct ModelMismatch : Error {
  using Error::Error;
};

struct BadIndex : Error {
  using Error::Error;
};

// split_iso only exists for the complex (dim 2) coefficient algebra.
struct WrongAlgebra : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

// Monomial basis would exceed the configured cap.
struct SizeOverflow : Error {
  using Error::Error;
};

struct DegenerateForm : Error {
  using Error::Error;
};

struct SolverFailure : Error {
  using Error::Error;
};

struct UnknownSuite : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct SchemaError : Error {
  using Error::Error;
};

}  // namespace jinv
