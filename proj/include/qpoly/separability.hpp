#pragma once

#include <optional>
#include <utility>

#include "qpoly/mpoly.hpp"
#include "qpoly/qstate.hpp"
#include "qpoly/types.hpp"

namespace qpoly {

/// Outcome of the 2x2 determinant test on a two-qubit state. The state is
/// entangled exactly when no factor pair exists; when factors are present
/// their tensor product reproduces the input to 1e-10.
struct SeparabilityVerdict {
  complex_t det;
  bool entangled = false;
  std::optional<std::pair<QubitState, QubitState>> factors;
};

/// Packs a two-qubit state's amplitudes row-major into the 2x2 coefficient
/// matrix [[c1, c2], [c3, c4]]. Throws WrongArity unless n == 2.
Mat2 coefficient_matrix(const QubitState& s);

/// Determinant criterion: entangled iff |det| exceeds det_tolerance (scaled
/// by the squared Frobenius norm). Separable states come back with their
/// single-qubit factors, left qubit first.
SeparabilityVerdict classify(const QubitState& s);

/// Factors a bilinear polynomial as q1(x) * q2(y) when possible. Both factors
/// are single-variable polynomials; multiplying them back with the x- and
/// y-variable maps reproduces p to 1e-10. Returns nullopt exactly when the
/// mirrored state is entangled. Throws AllZero for the zero polynomial.
std::optional<std::pair<MultilinearPoly, MultilinearPoly>> factor_bilinear(
    const MultilinearPoly& p);

} // namespace qpoly
