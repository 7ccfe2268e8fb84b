#include "qpoly/numerics.hpp"

#include <cmath>

#include "qpoly/errors.hpp"

namespace qpoly {

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

complex_t gaussian_complex(std::mt19937_64& rng) {
  const double u1 = uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

Mat4 random_unitary4(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Mat4 gauss;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) gauss(r, c) = gaussian_complex(rng);

  Eigen::HouseholderQR<Mat4> qr(gauss);
  Mat4 q = qr.householderQ();
  const Mat4 r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Multiplying column j by phase(r_jj) makes the effective R diagonal real
  // positive, which pins the otherwise arbitrary column phases.
  for (int j = 0; j < 4; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

std::optional<Rank1Factors> rank1_decompose(const Mat2& m, double tol) {
  if (m.cwiseAbs().maxCoeff() < 1e-15)
    throw AllZero("all entries below 1e-15; rank-1 factorization not unique");

  const double scale = std::max(1.0, m.squaredNorm());
  if (std::abs(det2(m)) > tol * scale) return std::nullopt;

  // Pivot on the largest-magnitude entry (first on ties, row-major).
  int pr = 0, pc = 0;
  double best = -1.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (std::abs(m(r, c)) > best) {
        best = std::abs(m(r, c));
        pr = r;
        pc = c;
      }

  Vec2 gamma = m.col(pc);
  Vec2 lambda = m.row(pr).transpose() / m(pr, pc);

  // Equalize the factor norms; the outer product is unchanged.
  const double balance = std::sqrt(gamma.norm() / lambda.norm());
  gamma /= balance;
  lambda *= balance;

  // Rotate the largest component of gamma onto the positive real axis.
  int gi = std::abs(gamma(0)) >= std::abs(gamma(1)) ? 0 : 1;
  const double gmag = std::abs(gamma(gi));
  if (gmag > 0.0) {
    const complex_t phase = gamma(gi) / gmag;
    gamma *= std::conj(phase);
    lambda *= phase;
  }
  return Rank1Factors{gamma, lambda};
}

} // namespace qpoly
