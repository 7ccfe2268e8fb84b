#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "qpoly/types.hpp"

namespace qpoly {

/// Relative determinant tolerance used by every separability decision:
/// a 2x2 matrix counts as rank-1 when |det| <= det_tolerance * max(1, ||m||_F^2).
inline constexpr double det_tolerance = 1e-10;

/// Determinant of a 2x2 matrix, m00*m11 - m01*m10.
inline complex_t det2(const Mat2& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

/// True iff max-norm of m*adjoint(m) - I is at most tol.
template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol) {
  using Plain = typename Derived::PlainObject;
  Plain gram = m * m.adjoint();
  gram -= Plain::Identity(m.rows(), m.cols());
  return gram.cwiseAbs().maxCoeff() <= tol;
}

/// Uniform double in (0, 1] from the top 53 bits of one mt19937_64 draw.
/// Fixed mapping, so streams are reproducible for a given seed.
double uniform_unit(std::mt19937_64& rng);

/// Standard complex Gaussian sample (independent N(0,1) real and imaginary
/// parts, variance 1 each) via Box-Muller on two uniform_unit draws.
complex_t gaussian_complex(std::mt19937_64& rng);

/// Deterministic random 4x4 unitary: QR of a seeded complex Gaussian matrix,
/// with column phases fixed so the R diagonal is real positive. Same seed,
/// same bits.
Mat4 random_unitary4(std::uint64_t seed);

/// Result of factoring m into an outer product gamma * lambda^T.
struct Rank1Factors {
  Vec2 gamma;  ///< column factor
  Vec2 lambda; ///< row factor
};

/// Rank-1 factorization of a 2x2 matrix. Returns a factor pair when
/// |det2(m)| <= tol * max(1, ||m||_F^2), otherwise nullopt. The pair is
/// canonical: ||gamma|| == ||lambda|| and the largest-magnitude component of
/// gamma is real and non-negative (first such component on magnitude ties,
/// row-major). Throws AllZero when every entry has magnitude below 1e-15.
std::optional<Rank1Factors> rank1_decompose(const Mat2& m, double tol);

} // namespace qpoly
