#pragma once

#include <random>

#include "qpoly/numerics.hpp"
#include "qpoly/qstate.hpp"

namespace qpoly::test {

inline QubitState random_state(int n, std::mt19937_64& rng) {
  CVector v(Eigen::Index(1) << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = gaussian_complex(rng);
  v /= v.norm();
  return make_state(n, v);
}

inline Vec2 random_gamma(std::mt19937_64& rng) {
  Vec2 g;
  g << gaussian_complex(rng), gaussian_complex(rng);
  g /= g.norm();
  return g;
}

inline double max_diff(const CVector& a, const CVector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

} // namespace qpoly::test
