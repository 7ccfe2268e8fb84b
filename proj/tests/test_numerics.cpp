#include "qpoly/numerics.hpp"

#include <gtest/gtest.h>

#include "qpoly/errors.hpp"
#include "qpoly/qstate.hpp"

namespace qpoly {
namespace {

Mat2 bell1_matrix() {
  Mat2 m;
  m << inv_sqrt2, 0.0, 0.0, inv_sqrt2;
  return m;
}

TEST(Det2, Identity) {
  EXPECT_EQ(det2(Mat2::Identity()), complex_t(1.0, 0.0));
}

TEST(Det2, BellCoefficientMatrix) {
  EXPECT_NEAR(det2(bell1_matrix()).real(), 0.5, 1e-15);
  EXPECT_EQ(det2(bell1_matrix()).imag(), 0.0);
}

TEST(Det2, RankOne) {
  Mat2 m;
  m << 0, 1, 0, 0;
  EXPECT_EQ(det2(m), complex_t(0.0, 0.0));
}

TEST(IsUnitary, Identity) {
  EXPECT_TRUE(is_unitary(Mat2::Identity(), 1e-12));
  EXPECT_TRUE(is_unitary(Mat4::Identity(), 1e-12));
}

TEST(IsUnitary, BellMatrix) {
  const double d = inv_sqrt2;
  Mat4 t;
  t << d, 0, 0, d,
       d, 0, 0, -d,
       0, d, d, 0,
       0, d, -d, 0;
  EXPECT_TRUE(is_unitary(t, 1e-12));
}

TEST(IsUnitary, ScaledIdentityFails) {
  EXPECT_FALSE(is_unitary(Mat2(2.0 * Mat2::Identity()), 1e-12));
}

TEST(RandomUnitary4, DeterministicPerSeed) {
  Mat4 a = random_unitary4(0);
  Mat4 b = random_unitary4(0);
  EXPECT_TRUE((a.array() == b.array()).all());
}

TEST(RandomUnitary4, SeedsDiffer) {
  EXPECT_FALSE((random_unitary4(0).array() == random_unitary4(1).array()).all());
}

TEST(RandomUnitary4, UnitaryForManySeeds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_TRUE(is_unitary(random_unitary4(seed), 1e-12)) << "seed " << seed;
  }
}

TEST(UniformUnit, InUnitIntervalAndReproducible) {
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  for (int i = 0; i < 1000; ++i) {
    double u = uniform_unit(a);
    EXPECT_GT(u, 0.0);
    EXPECT_LE(u, 1.0);
    EXPECT_EQ(u, uniform_unit(b));
  }
}

TEST(Rank1Decompose, SingleEntry) {
  Mat2 m;
  m << 1, 0, 0, 0;
  auto f = rank1_decompose(m, det_tolerance);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->gamma(0), complex_t(1.0, 0.0));
  EXPECT_EQ(f->gamma(1), complex_t(0.0, 0.0));
  EXPECT_EQ(f->lambda(0), complex_t(1.0, 0.0));
  EXPECT_EQ(f->lambda(1), complex_t(0.0, 0.0));
}

TEST(Rank1Decompose, FullRankAbsent) {
  EXPECT_FALSE(rank1_decompose(bell1_matrix(), det_tolerance).has_value());
}

TEST(Rank1Decompose, RoundTrip) {
  Vec2 gamma;
  gamma << complex_t(0.6, 0.0), complex_t(0.0, 0.8);
  Vec2 lambda;
  lambda << inv_sqrt2, inv_sqrt2;
  Mat2 m = gamma * lambda.transpose();
  auto f = rank1_decompose(m, det_tolerance);
  ASSERT_TRUE(f.has_value());
  Mat2 back = f->gamma * f->lambda.transpose();
  EXPECT_LE((back - m).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Rank1Decompose, AllZeroThrows) {
  EXPECT_THROW(rank1_decompose(Mat2::Zero(), det_tolerance), AllZero);
}

TEST(Rank1Decompose, CanonicalForm) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Vec2 g, l;
    g << gaussian_complex(rng), gaussian_complex(rng);
    l << gaussian_complex(rng), gaussian_complex(rng);
    auto f = rank1_decompose(Mat2(g * l.transpose()), det_tolerance);
    ASSERT_TRUE(f.has_value());
    EXPECT_NEAR(f->gamma.norm(), f->lambda.norm(), 1e-12);
    int big = std::abs(f->gamma(0)) >= std::abs(f->gamma(1)) ? 0 : 1;
    EXPECT_NEAR(f->gamma(big).imag(), 0.0, 1e-12);
    EXPECT_GE(f->gamma(big).real(), 0.0);
  }
}

// Presence of a factorization tracks the determinant threshold on both
// rank-1 and full-rank draws.
TEST(Rank1Decompose, PresenceMatchesDeterminant) {
  std::mt19937_64 rng(11);
  int rank1_seen = 0;
  int fullrank_seen = 0;
  while (rank1_seen < 500 || fullrank_seen < 500) {
    Mat2 m;
    if (rank1_seen < 500) {
      Vec2 g, l;
      g << gaussian_complex(rng), gaussian_complex(rng);
      l << gaussian_complex(rng), gaussian_complex(rng);
      m = g * l.transpose();
      ++rank1_seen;
    } else {
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = gaussian_complex(rng);
      if (std::abs(det2(m)) < 0.05) continue;
      ++fullrank_seen;
    }
    bool small_det =
        std::abs(det2(m)) <= det_tolerance * std::max(1.0, m.squaredNorm());
    auto f = rank1_decompose(m, det_tolerance);
    EXPECT_EQ(f.has_value(), small_det);
    if (f) {
      Mat2 back = f->gamma * f->lambda.transpose();
      EXPECT_LE((back - m).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

} // namespace
} // namespace qpoly
