#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qpoly/qstate.hpp"
#include "qpoly/types.hpp"

namespace qpoly {

/// Polynomial of degree at most one in each variable. Coefficient index m
/// selects the monomial whose variables are the set bits of m: bit j set
/// means variable v_j appears. v_0, v_1, v_2 print as x, y, z.
struct MultilinearPoly {
  int nvars = 0;
  CVector coeffs;
};

/// Injective assignment of a factor's variable slots to variables of a larger
/// polynomial; image[t] is where slot t lands.
struct VarMap {
  std::vector<int> image;

  explicit VarMap(std::vector<int> image_);
  static VarMap identity(int nvars);
  static VarMap shifted(int nvars, int offset);
};

/// State -> polynomial bijection. The rightmost ket position carries x, the
/// next one y, and so on, which makes the coefficient array a straight copy
/// of the amplitude array: c1|00> + c2|01> + c3|10> + c4|11> becomes
/// c1 + c2 x + c3 y + c4 xy.
MultilinearPoly state_to_poly(const QubitState& s);

/// Inverse of state_to_poly. Throws NotNormalized when the coefficient vector
/// is not unit-norm within 1e-10.
QubitState poly_to_state(const MultilinearPoly& p);

/// Evaluates p at a point, one coordinate per variable.
complex_t evaluate(const MultilinearPoly& p, const CVector& point);

/// Product of two polynomials over disjoint variable images. Throws
/// VariableCollision when the images intersect. The result spans variables
/// 0..max(image), with coefficients given by products of factor coefficients.
MultilinearPoly poly_product(const MultilinearPoly& p, const MultilinearPoly& q,
                             const VarMap& pvars, const VarMap& qvars);

/// Rewrites a polynomial over (x, y, z) as
///   p = sum_k basis_k(y, z) * (alpha_k + beta_k x)
/// for a given 4-element basis over (y, z), returning the (alpha_k, beta_k)
/// pairs. Throws SingularBasis when the basis coefficient matrix over
/// {1, y, z, yz} is not invertible within tolerance 1e-10. The reconstruction
/// is checked coefficientwise to 1e-12.
std::array<std::pair<complex_t, complex_t>, 4> regroup_in_basis(
    const MultilinearPoly& p, const std::array<MultilinearPoly, 4>& basis);

/// Coefficientwise sum/difference/scaling; operands must share nvars.
MultilinearPoly operator+(const MultilinearPoly& a, const MultilinearPoly& b);
MultilinearPoly operator-(const MultilinearPoly& a, const MultilinearPoly& b);
MultilinearPoly operator*(complex_t scale, const MultilinearPoly& p);

/// Monomial for coefficient index m, e.g. "1", "x", "x*y", "v3".
std::string monomial_name(int index);

/// Human-readable form, terms in index order, exact zeros skipped.
std::string to_string(const MultilinearPoly& p);

} // namespace qpoly
