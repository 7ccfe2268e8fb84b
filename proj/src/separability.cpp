#include "qpoly/separability.hpp"

#include "qpoly/errors.hpp"
#include "qpoly/numerics.hpp"

namespace qpoly {

Mat2 coefficient_matrix(const QubitState& s) {
  if (s.n != 2)
    throw WrongArity("coefficient matrix needs a 2-qubit state, got n = " +
                     std::to_string(s.n));
  Mat2 a;
  a << s.amplitudes(0), s.amplitudes(1), s.amplitudes(2), s.amplitudes(3);
  return a;
}

SeparabilityVerdict classify(const QubitState& s) {
  const Mat2 a = coefficient_matrix(s);
  SeparabilityVerdict verdict;
  verdict.det = det2(a);
  const auto factors = rank1_decompose(a, det_tolerance);
  verdict.entangled = !factors.has_value();
  if (factors) {
    // For a unit-norm state both factor norms equal sqrt(||a||_F) ~= 1.
    QubitState left{1, factors->gamma};
    QubitState right{1, factors->lambda};
    verdict.factors = {std::move(left), std::move(right)};
  }
  return verdict;
}

std::optional<std::pair<MultilinearPoly, MultilinearPoly>> factor_bilinear(
    const MultilinearPoly& p) {
  if (p.nvars != 2 || p.coeffs.size() != 4)
    throw BadArity("factor_bilinear needs a bilinear polynomial, got nvars = " +
                   std::to_string(p.nvars));
  Mat2 a;
  a << p.coeffs(0), p.coeffs(1), p.coeffs(2), p.coeffs(3);
  const auto factors = rank1_decompose(a, det_tolerance);
  if (!factors) return std::nullopt;
  // a_ij = gamma_i * lambda_j with the x coefficient at a_12, so lambda
  // carries x and gamma carries y: p = (l1 + l2 x)(g1 + g2 y).
  MultilinearPoly q1{1, factors->lambda};
  MultilinearPoly q2{1, factors->gamma};
  return std::make_pair(std::move(q1), std::move(q2));
}

} // namespace qpoly
