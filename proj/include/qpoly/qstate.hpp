#pragma once

#include <array>

#include "qpoly/types.hpp"

namespace qpoly {

/// Normalized n-qubit state. Amplitudes are indexed by the basis bitstring
/// read as a binary integer, leftmost ket symbol being the most significant
/// bit: for two qubits the order is |00>, |01>, |10>, |11>.
struct QubitState {
  int n = 0;
  CVector amplitudes;
};

/// One of the four Bell states, 1-based as usual.
class BellIndex {
 public:
  explicit BellIndex(int value);
  int value() const { return value_; }

 private:
  int value_;
};

/// Builds a state from raw amplitudes. Throws BadLength when the array size is
/// not 2^n (or n is outside 1..12) and NotNormalized when the squared norm
/// deviates from 1 by more than 1e-10. No silent renormalization.
QubitState make_state(int n, const CVector& amplitudes);

/// |00...0> on n qubits.
QubitState zero_state(int n);

/// Tensor product; a's qubits occupy the leftmost ket positions.
QubitState tensor(const QubitState& a, const QubitState& b);

/// The four Bell states:
///   1: (|00> + |11>)/sqrt(2)    2: (|00> - |11>)/sqrt(2)
///   3: (|01> + |10>)/sqrt(2)    4: (|01> - |10>)/sqrt(2)
QubitState bell_state(BellIndex i);

/// Inner product <a|b>. Throws WrongArity on mismatched qubit counts.
complex_t inner(const QubitState& a, const QubitState& b);

/// Coordinates of a two-qubit state in the Bell basis, d_i = <B_i|s>.
std::array<complex_t, 4> bell_decompose(const QubitState& s);

/// Whether two states agree up to a global phase: |<a|b>| >= 1 - tol.
bool phase_equal(const QubitState& a, const QubitState& b, double tol);

} // namespace qpoly
