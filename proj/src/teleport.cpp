#include "qpoly/teleport.hpp"

#include <cmath>

#include "qpoly/errors.hpp"
#include "qpoly/numerics.hpp"

namespace qpoly {

namespace {

void check_gamma(const Vec2& gamma) {
  double deficit = std::abs(gamma.squaredNorm() - 1.0);
  if (!(deficit <= 1e-10)) throw NotNormalized(deficit);
}

void check_outcome(int i, const char* what) {
  if (i < 1 || i > 4) {
    throw Error(std::string(what) + " index must be in 1..4");
  }
}

// Adjugate over determinant; exact for the Bell maps whose entries and
// determinants are powers of two.
Mat2 inverse2(const Mat2& g) {
  complex_t det = det2(g);
  Mat2 inv;
  inv << g(1, 1) / det, -g(0, 1) / det, -g(1, 0) / det, g(0, 0) / det;
  return inv;
}

// Scales g so its largest-magnitude entry becomes exactly 1. The scan is
// row-major and keeps the first maximum on ties.
Mat2 normalize_gate(const Mat2& g) {
  int br = 0;
  int bc = 0;
  double best = -1.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      double mag = std::abs(g(r, c));
      if (mag > best) {
        best = mag;
        br = r;
        bc = c;
      }
    }
  }
  return g / g(br, bc);
}

std::array<TeleportBranch, 4> branches_from_maps(
    const Vec2& gamma, const std::array<Mat2, 4>& maps) {
  std::array<TeleportBranch, 4> out;
  for (int k = 0; k < 4; ++k) {
    out[k].outcome = k + 1;
    out[k].residual = maps[k] * gamma;
    if (std::abs(det2(maps[k])) > det_tolerance) {
      out[k].correction = normalize_gate(inverse2(maps[k]));
    }
  }
  return out;
}

std::array<Mat2, 4> general_maps(const EntangledBasis& b, int i) {
  std::array<Mat2, 4> maps;
  for (int k = 0; k < 4; ++k) {
    maps[k] = (b.blocks[k].conjugate() * b.blocks[i - 1]).transpose();
  }
  return maps;
}

// The four Bell branch maps in closed form; every entry is exact.
std::array<Mat2, 4> bell_maps() {
  std::array<Mat2, 4> maps;
  maps[0] << 0.5, 0.0, 0.0, 0.5;
  maps[1] << 0.5, 0.0, 0.0, -0.5;
  maps[2] << 0.0, 0.5, 0.5, 0.0;
  maps[3] << 0.0, -0.5, 0.5, 0.0;
  return maps;
}

} // namespace

EntangledBasis make_basis(const Mat4& t) {
  Mat4 gram = t * t.adjoint();
  double deviation = (gram - Mat4::Identity()).cwiseAbs().maxCoeff();
  if (!(deviation <= 1e-10)) throw NotUnitary(deviation);

  EntangledBasis b;
  b.T = t;
  for (int i = 0; i < 4; ++i) {
    b.blocks[i] << t(i, 0), t(i, 1), t(i, 2), t(i, 3);
    double scale = std::max(1.0, b.blocks[i].squaredNorm());
    b.block_entangled[i] =
        std::abs(det2(b.blocks[i])) > det_tolerance * scale;
  }
  return b;
}

EntangledBasis bell_basis() {
  const double d = inv_sqrt2;
  Mat4 t;
  t << d, 0, 0, d,
       d, 0, 0, -d,
       0, d, d, 0,
       0, d, -d, 0;
  return make_basis(t);
}

std::array<QubitState, 4> basis_states(const EntangledBasis& b) {
  std::array<QubitState, 4> out;
  for (int i = 0; i < 4; ++i) {
    out[i] = QubitState{2, b.T.row(i).transpose()};
  }
  return out;
}

Vec4 computational_in_basis(const EntangledBasis& b, int j) {
  check_outcome(j, "computational state");
  return b.T.col(j - 1).conjugate();
}

std::array<TeleportBranch, 4> teleport_bell(const Vec2& gamma) {
  check_gamma(gamma);
  return branches_from_maps(gamma, bell_maps());
}

std::array<TeleportBranch, 4> teleport_general(const Vec2& gamma,
                                               const EntangledBasis& b,
                                               int i) {
  check_gamma(gamma);
  check_outcome(i, "resource state");
  return branches_from_maps(gamma, general_maps(b, i));
}

Mat2 correction_gate(const EntangledBasis& b, int k, int i) {
  check_outcome(k, "outcome");
  check_outcome(i, "resource state");
  Mat2 g = (b.blocks[k - 1].conjugate() * b.blocks[i - 1]).transpose();
  if (std::abs(det2(g)) <= det_tolerance) {
    throw SingularBranch("branch map for outcome " + std::to_string(k) +
                         " is not invertible");
  }
  Mat2 gate = normalize_gate(inverse2(g));

  // For blocks that are unitary up to the 1/sqrt(2) factor the inverse is
  // proportional to M_k * conj(M_i); keep that cross-check on the exact path.
  Mat2 mk = std::numbers::sqrt2 * b.blocks[k - 1];
  Mat2 mi = std::numbers::sqrt2 * b.blocks[i - 1];
  if (is_unitary(mk, 1e-10) && is_unitary(mi, 1e-10)) {
    Mat2 alt = normalize_gate(b.blocks[k - 1] * b.blocks[i - 1].conjugate());
    double mismatch = (gate - alt).cwiseAbs().maxCoeff();
    if (!(mismatch <= 1e-10)) {
      throw Error("correction gate disagrees with unitary-block form");
    }
  }
  return gate;
}

std::array<std::pair<complex_t, complex_t>, 4> teleport_poly(
    const Vec2& gamma, const EntangledBasis& b, int i) {
  check_gamma(gamma);
  check_outcome(i, "resource state");

  MultilinearPoly q{1, gamma};
  MultilinearPoly row{2, b.T.row(i - 1).transpose()};
  MultilinearPoly product =
      poly_product(q, row, VarMap({2}), VarMap({0, 1}));

  std::array<MultilinearPoly, 4> basis;
  for (int k = 0; k < 4; ++k) {
    basis[k] = MultilinearPoly{2, b.T.row(k).transpose()};
  }
  return regroup_in_basis(product, basis);
}

} // namespace qpoly
