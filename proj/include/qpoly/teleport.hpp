#pragma once

#include <array>
#include <optional>
#include <utility>

#include "qpoly/mpoly.hpp"
#include "qpoly/qstate.hpp"
#include "qpoly/types.hpp"

namespace qpoly {

/// Orthonormal two-qubit basis given by the rows of a unitary 4x4 matrix T.
/// Block i is T's row i folded row-major into 2x2; the basis state V_i is
/// entangled exactly when its block has nonzero determinant.
struct EntangledBasis {
  Mat4 T;
  std::array<Mat2, 4> blocks;
  std::array<bool, 4> block_entangled{};
};

/// One measurement outcome of a teleportation: the receiver's unnormalized
/// qubit (residual) and, when the branch map is invertible, the gate that
/// restores the sent state. The correction is scaled so its largest-magnitude
/// entry is exactly 1 (first such entry on ties, row-major).
struct TeleportBranch {
  int outcome = 0; // 1..4
  Vec2 residual;
  std::optional<Mat2> correction;
};

/// Validates T (unitary within 1e-10, else NotUnitary) and derives the
/// blocks plus their entanglement flags.
EntangledBasis make_basis(const Mat4& t);

/// The Bell matrix: row i holds the amplitudes of the i-th Bell state.
EntangledBasis bell_basis();

/// The four basis states V_i, i.e. T's rows as two-qubit states.
std::array<QubitState, 4> basis_states(const EntangledBasis& b);

/// Coordinates of the computational state |C_j> (j in 1..4) in the V basis:
/// column j of conj(T), so that |C_j> = sum_k coords_k |V_k>.
Vec4 computational_in_basis(const EntangledBasis& b, int j);

/// Teleportation over the first Bell state: branch k carries residual
///   (g1, g2)/2, (g1, -g2)/2, (g2, g1)/2, (-g2, g1)/2
/// for outcomes B_1..B_4. Throws NotNormalized unless |g1|^2 + |g2|^2 = 1
/// within 1e-10.
std::array<TeleportBranch, 4> teleport_bell(const Vec2& gamma);

/// Teleportation over basis state V_i (i in 1..4): branch k's residual is
/// transpose(conj(M_k) * M_i) * gamma. Matches the brute-force re-expansion
/// of |phi> (x) |V_i> in the V_k basis.
std::array<TeleportBranch, 4> teleport_general(const Vec2& gamma,
                                               const EntangledBasis& b, int i);

/// Exact inverse of the branch map G = transpose(conj(M_k) * M_i). Throws
/// SingularBranch when |det G| <= 1e-10. When sqrt(2)*M_k and sqrt(2)*M_i are
/// both unitary the result is checked to be proportional to M_k * conj(M_i).
Mat2 correction_gate(const EntangledBasis& b, int k, int i);

/// Polynomial-side teleportation: multiplies Q(z) = g1 + g2 z with the row
/// polynomial R_i(x, y) and regroups the product in the basis R_1..R_4 over
/// (y, z). The returned (alpha_k, beta_k) pairs equal teleport_general's
/// residuals componentwise.
std::array<std::pair<complex_t, complex_t>, 4> teleport_poly(
    const Vec2& gamma, const EntangledBasis& b, int i);

} // namespace qpoly
