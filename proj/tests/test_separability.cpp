#include "qpoly/separability.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qpoly/errors.hpp"
#include "qpoly/numerics.hpp"
#include "test_support.hpp"

namespace qpoly {
namespace {

using test::random_state;

CVector cv(std::initializer_list<complex_t> values) {
  CVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const complex_t& z : values) v(i++) = z;
  return v;
}

TEST(CoefficientMatrix, RowMajorPacking) {
  Mat2 b1 = coefficient_matrix(bell_state(BellIndex(1)));
  EXPECT_EQ(b1(0, 0), complex_t(inv_sqrt2, 0.0));
  EXPECT_EQ(b1(0, 1), complex_t(0.0, 0.0));
  EXPECT_EQ(b1(1, 0), complex_t(0.0, 0.0));
  EXPECT_EQ(b1(1, 1), complex_t(inv_sqrt2, 0.0));

  Mat2 ket01 = coefficient_matrix(make_state(2, cv({0.0, 1.0, 0.0, 0.0})));
  EXPECT_EQ(ket01(0, 1), complex_t(1.0, 0.0));
  EXPECT_EQ(std::abs(ket01(0, 0)) + std::abs(ket01(1, 0)) +
                std::abs(ket01(1, 1)),
            0.0);

  Mat2 b4 = coefficient_matrix(bell_state(BellIndex(4)));
  EXPECT_EQ(b4(0, 1), complex_t(inv_sqrt2, 0.0));
  EXPECT_EQ(b4(1, 0), complex_t(-inv_sqrt2, 0.0));

  EXPECT_THROW(coefficient_matrix(zero_state(1)), WrongArity);
}

TEST(Classify, BellStateEntangled) {
  SeparabilityVerdict v = classify(bell_state(BellIndex(1)));
  EXPECT_NEAR(v.det.real(), 0.5, 1e-15);
  EXPECT_TRUE(v.entangled);
  EXPECT_FALSE(v.factors.has_value());
}

TEST(Classify, ProductKetFactors) {
  SeparabilityVerdict v = classify(make_state(2, cv({0.0, 1.0, 0.0, 0.0})));
  EXPECT_FALSE(v.entangled);
  ASSERT_TRUE(v.factors.has_value());
  EXPECT_NEAR(std::abs(v.factors->first.amplitudes(0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(v.factors->second.amplitudes(1) - 1.0), 0.0, 1e-15);
}

TEST(Classify, RandomProductsReconstruct) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    QubitState a = random_state(1, rng);
    QubitState b = random_state(1, rng);
    QubitState s = tensor(a, b);
    SeparabilityVerdict v = classify(s);
    EXPECT_LE(std::abs(v.det), 1e-10);
    EXPECT_FALSE(v.entangled);
    ASSERT_TRUE(v.factors.has_value());
    QubitState back = tensor(v.factors->first, v.factors->second);
    EXPECT_LE(test::max_diff(back.amplitudes, s.amplitudes), 1e-10);
  }
}

TEST(Classify, DeterminantModulusPhaseInvariant) {
  std::mt19937_64 rng(23);
  QubitState s = random_state(2, rng);
  double base = std::abs(classify(s).det);
  for (double theta : {0.3, 1.1, 2.9}) {
    QubitState rotated{2, std::exp(complex_t(0.0, theta)) * s.amplitudes};
    EXPECT_NEAR(std::abs(classify(rotated).det), base, 1e-15);
  }
}

TEST(FactorBilinear, PerfectSquare) {
  MultilinearPoly p{2, cv({0.5, 0.5, 0.5, 0.5})};
  auto factors = factor_bilinear(p);
  ASSERT_TRUE(factors.has_value());
  const auto& [q1, q2] = *factors;
  EXPECT_EQ(q1.nvars, 1);
  EXPECT_EQ(q2.nvars, 1);
  // Both factors are proportional to 1 + v.
  EXPECT_NEAR(std::abs(q1.coeffs(0) - q1.coeffs(1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(q2.coeffs(0) - q2.coeffs(1)), 0.0, 1e-12);
  MultilinearPoly back = poly_product(q1, q2, VarMap({0}), VarMap({1}));
  EXPECT_LE(test::max_diff(back.coeffs, p.coeffs), 1e-10);
}

TEST(FactorBilinear, EntangledPolynomialsHaveNone) {
  EXPECT_FALSE(factor_bilinear(state_to_poly(bell_state(BellIndex(1)))));
  EXPECT_FALSE(factor_bilinear(state_to_poly(bell_state(BellIndex(3)))));
}

TEST(FactorBilinear, ZeroPolynomialRejected) {
  EXPECT_THROW(factor_bilinear(MultilinearPoly{2, CVector::Zero(4)}), AllZero);
  EXPECT_THROW(factor_bilinear(MultilinearPoly{1, cv({1.0, 0.0})}), BadArity);
}

TEST(FactorBilinear, FactorVariablesMultiplyBack) {
  // a known split: (1 + 2x)(3 + 4y)/norm, x from the second slot of the
  // coefficient row, y from the first.
  Vec2 lambda, gamma;
  lambda << 1.0, 2.0;
  gamma << 3.0, 4.0;
  Mat2 a = gamma * lambda.transpose();
  CVector coeffs = cv({a(0, 0), a(0, 1), a(1, 0), a(1, 1)});
  coeffs /= coeffs.norm();
  MultilinearPoly p{2, coeffs};
  auto factors = factor_bilinear(p);
  ASSERT_TRUE(factors.has_value());
  // q1 carries x: its coefficient ratio must match 2/1, and q2's 4/3.
  EXPECT_NEAR(std::abs(factors->first.coeffs(1) / factors->first.coeffs(0) -
                       complex_t(2.0, 0.0)),
              0.0, 1e-12);
  EXPECT_NEAR(std::abs(factors->second.coeffs(1) / factors->second.coeffs(0) -
                       complex_t(4.0 / 3.0, 0.0)),
              0.0, 1e-12);
}

// The determinant test and polynomial factorability agree on separability.
TEST(Equivalence, ClassifyMatchesFactorBilinear) {
  std::mt19937_64 rng(25);
  int checked = 0;
  for (int trial = 0; checked < 400; ++trial) {
    QubitState s;
    if (checked % 2 == 0) {
      s = tensor(random_state(1, rng), random_state(1, rng));
    } else {
      s = random_state(2, rng);
      if (std::abs(det2(coefficient_matrix(s))) < 0.05) continue;
    }
    ++checked;
    bool entangled = classify(s).entangled;
    auto factors = factor_bilinear(state_to_poly(s));
    EXPECT_EQ(entangled, !factors.has_value());
  }
}

} // namespace
} // namespace qpoly
