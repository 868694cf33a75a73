#pragma once

#include <stdexcept>
#include <string>

namespace argshift {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFiniteError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct NodeCollisionError : Error {
  using Error::Error;
};

struct DegeneratePairingError : Error {
  using Error::Error;
};

struct AlgebraMismatchError : Error {
  using Error::Error;
};

struct DegreeOutOfRangeError : Error {
  using Error::Error;
};

struct NotRegularError : Error {
  using Error::Error;
};

/// The two regularity tests (centralizer dimension vs. Krylov span) disagree;
/// signals an ill-conditioned input rather than a mathematical state.
struct ClassifierDisagreementError : Error {
  using Error::Error;
};

struct SamplerExhaustedError : Error {
  using Error::Error;
};

struct NotSubregularError : Error {
  using Error::Error;
};

struct NotSemisimpleError : Error {
  using Error::Error;
};

struct NotOnSingularLocusError : Error {
  using Error::Error;
};

struct WrongAlgebraError : Error {
  using Error::Error;
};

struct WrongShiftKindError : Error {
  using Error::Error;
};

struct NotSmoothError : Error {
  using Error::Error;
};

struct InsufficientRegularLambdasError : Error {
  using Error::Error;
};

}  // namespace argshift
