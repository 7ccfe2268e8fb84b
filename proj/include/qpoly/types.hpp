#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace qpoly {

using complex_t = std::complex<double>;

using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using CVector = Eigen::VectorXcd;

// Correctly rounded 1/sqrt(2); dividing sqrt(2) by two is exact.
inline constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;

} // namespace qpoly
