#include "qpoly/qstate.hpp"

#include <cmath>

#include "qpoly/errors.hpp"

namespace qpoly {

namespace {
constexpr int max_qubits = 12;
}

BellIndex::BellIndex(int value) : value_(value) {
  if (value < 1 || value > 4)
    throw Error("Bell index must be in 1..4, got " + std::to_string(value));
}

QubitState make_state(int n, const CVector& amplitudes) {
  if (n < 1 || n > max_qubits)
    throw BadLength("qubit count must be in 1.." + std::to_string(max_qubits) +
                    ", got " + std::to_string(n));
  if (amplitudes.size() != Eigen::Index(1) << n)
    throw BadLength("expected " + std::to_string(std::size_t(1) << n) +
                    " amplitudes, got " + std::to_string(amplitudes.size()));
  const double deficit = std::abs(amplitudes.squaredNorm() - 1.0);
  if (!(deficit <= 1e-10)) throw NotNormalized(deficit);
  return QubitState{n, amplitudes};
}

QubitState zero_state(int n) {
  if (n < 1 || n > max_qubits)
    throw BadLength("qubit count must be in 1.." + std::to_string(max_qubits));
  CVector amp = CVector::Zero(Eigen::Index(1) << n);
  amp(0) = 1.0;
  return QubitState{n, std::move(amp)};
}

QubitState tensor(const QubitState& a, const QubitState& b) {
  if (a.n + b.n > max_qubits)
    throw BadLength("tensor product exceeds " + std::to_string(max_qubits) +
                    " qubits");
  QubitState out;
  out.n = a.n + b.n;
  out.amplitudes.resize(Eigen::Index(1) << out.n);
  for (Eigen::Index j = 0; j < a.amplitudes.size(); ++j)
    for (Eigen::Index k = 0; k < b.amplitudes.size(); ++k)
      out.amplitudes((j << b.n) | k) = a.amplitudes(j) * b.amplitudes(k);
  return out;
}

QubitState bell_state(BellIndex i) {
  CVector amp = CVector::Zero(4);
  const double d = inv_sqrt2;
  switch (i.value()) {
    case 1: amp(0) = d; amp(3) = d; break;
    case 2: amp(0) = d; amp(3) = -d; break;
    case 3: amp(1) = d; amp(2) = d; break;
    case 4: amp(1) = d; amp(2) = -d; break;
  }
  return QubitState{2, std::move(amp)};
}

complex_t inner(const QubitState& a, const QubitState& b) {
  if (a.n != b.n)
    throw WrongArity("inner product of " + std::to_string(a.n) + "- and " +
                     std::to_string(b.n) + "-qubit states");
  return a.amplitudes.dot(b.amplitudes);
}

std::array<complex_t, 4> bell_decompose(const QubitState& s) {
  if (s.n != 2)
    throw WrongArity("Bell decomposition needs a 2-qubit state, got n = " +
                     std::to_string(s.n));
  std::array<complex_t, 4> coords;
  for (int i = 1; i <= 4; ++i)
    coords[i - 1] = inner(bell_state(BellIndex(i)), s);
  return coords;
}

bool phase_equal(const QubitState& a, const QubitState& b, double tol) {
  return std::abs(inner(a, b)) >= 1.0 - tol;
}

} // namespace qpoly
