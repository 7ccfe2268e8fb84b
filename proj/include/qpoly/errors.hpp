#pragma once

#include <stdexcept>
#include <string>

namespace qpoly {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Amplitude (or coefficient) vector is not unit-norm.
struct NotNormalized : Error {
  double deficit;
  explicit NotNormalized(double deficit_)
      : Error("vector is not normalized, |norm^2 - 1| = " +
              std::to_string(deficit_)),
        deficit(deficit_) {}
};

/// Amplitude array length does not match the qubit count (or the count is
/// outside the supported 1..12 range).
struct BadLength : Error {
  using Error::Error;
};

/// Operation applied to a state with the wrong qubit count.
struct WrongArity : Error {
  using Error::Error;
};

/// Operation applied to a polynomial (or point) with the wrong variable count.
struct BadArity : Error {
  using Error::Error;
};

/// Two variable maps whose images overlap.
struct VariableCollision : Error {
  using Error::Error;
};

/// Regrouping basis is not invertible within tolerance.
struct SingularBasis : Error {
  using Error::Error;
};

/// Every matrix entry is numerically zero; factorization is non-unique.
struct AllZero : Error {
  using Error::Error;
};

/// Matrix fails the unitarity check.
struct NotUnitary : Error {
  double deviation;
  explicit NotUnitary(double deviation_)
      : Error("matrix is not unitary, max|M M^H - I| = " +
              std::to_string(deviation_)),
        deviation(deviation_) {}
};

/// Teleportation branch whose transfer matrix is not invertible.
struct SingularBranch : Error {
  using Error::Error;
};

/// Polynomial has coefficients with non-negligible imaginary parts where a
/// real surface is required.
struct ComplexCoefficients : Error {
  using Error::Error;
};

/// Sampling grid violates min < max or n >= 2.
struct BadGrid : Error {
  using Error::Error;
};

/// Circuit source text rejected, with the 1-based offending line.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& message)
      : Error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

/// Structurally invalid state/polynomial/basis document.
struct FileFormatError : Error {
  using Error::Error;
};

} // namespace qpoly
