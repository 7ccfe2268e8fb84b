#include "qpoly/mpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qpoly/errors.hpp"

namespace qpoly {

namespace {
constexpr int max_vars = 12;

void check_poly(const MultilinearPoly& p, const char* who) {
  if (p.nvars < 0 || p.nvars > max_vars ||
      p.coeffs.size() != Eigen::Index(1) << p.nvars)
    throw BadArity(std::string(who) + ": malformed polynomial (nvars = " +
                   std::to_string(p.nvars) + ", " +
                   std::to_string(p.coeffs.size()) + " coefficients)");
}
} // namespace

VarMap::VarMap(std::vector<int> image_) : image(std::move(image_)) {
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] < 0 || image[i] >= max_vars)
      throw VariableCollision("variable image out of range: " +
                              std::to_string(image[i]));
    for (std::size_t j = 0; j < i; ++j)
      if (image[i] == image[j])
        throw VariableCollision("variable map is not injective");
  }
}

VarMap VarMap::identity(int nvars) {
  std::vector<int> image(nvars);
  for (int i = 0; i < nvars; ++i) image[i] = i;
  return VarMap(std::move(image));
}

VarMap VarMap::shifted(int nvars, int offset) {
  std::vector<int> image(nvars);
  for (int i = 0; i < nvars; ++i) image[i] = i + offset;
  return VarMap(std::move(image));
}

MultilinearPoly state_to_poly(const QubitState& s) {
  return MultilinearPoly{s.n, s.amplitudes};
}

QubitState poly_to_state(const MultilinearPoly& p) {
  check_poly(p, "poly_to_state");
  return make_state(p.nvars, p.coeffs);
}

complex_t evaluate(const MultilinearPoly& p, const CVector& point) {
  check_poly(p, "evaluate");
  if (point.size() != p.nvars)
    throw BadArity("evaluate: expected " + std::to_string(p.nvars) +
                   " coordinates, got " + std::to_string(point.size()));
  complex_t sum = 0.0;
  for (Eigen::Index m = 0; m < p.coeffs.size(); ++m) {
    complex_t term = p.coeffs(m);
    for (int j = 0; j < p.nvars; ++j)
      if ((m >> j) & 1) term *= point(j);
    sum += term;
  }
  return sum;
}

MultilinearPoly poly_product(const MultilinearPoly& p, const MultilinearPoly& q,
                             const VarMap& pvars, const VarMap& qvars) {
  check_poly(p, "poly_product");
  check_poly(q, "poly_product");
  if (static_cast<int>(pvars.image.size()) != p.nvars ||
      static_cast<int>(qvars.image.size()) != q.nvars)
    throw BadArity("poly_product: variable map size does not match nvars");
  for (int a : pvars.image)
    for (int b : qvars.image)
      if (a == b)
        throw VariableCollision("variable " + std::to_string(a) +
                                " appears in both factors");

  int top = -1; // a product of constants stays a constant
  for (int v : pvars.image) top = std::max(top, v);
  for (int v : qvars.image) top = std::max(top, v);

  MultilinearPoly out;
  out.nvars = top + 1;
  out.coeffs = CVector::Zero(Eigen::Index(1) << out.nvars);

  const auto mapped = [](Eigen::Index m, const VarMap& vm) {
    Eigen::Index bits = 0;
    for (std::size_t j = 0; j < vm.image.size(); ++j)
      if ((m >> j) & 1) bits |= Eigen::Index(1) << vm.image[j];
    return bits;
  };

  for (Eigen::Index mp = 0; mp < p.coeffs.size(); ++mp) {
    const Eigen::Index pbits = mapped(mp, pvars);
    for (Eigen::Index mq = 0; mq < q.coeffs.size(); ++mq)
      out.coeffs(pbits | mapped(mq, qvars)) += p.coeffs(mp) * q.coeffs(mq);
  }
  return out;
}

std::array<std::pair<complex_t, complex_t>, 4> regroup_in_basis(
    const MultilinearPoly& p, const std::array<MultilinearPoly, 4>& basis) {
  check_poly(p, "regroup_in_basis");
  if (p.nvars != 3)
    throw BadArity("regroup_in_basis: polynomial must span (x, y, z)");
  for (const auto& b : basis) {
    check_poly(b, "regroup_in_basis");
    if (b.nvars != 2)
      throw BadArity("regroup_in_basis: basis polynomials must span (y, z)");
  }

  // Column k holds basis_k's coefficients over {1, y, z, yz}.
  Mat4 bmat;
  for (int m = 0; m < 4; ++m)
    for (int k = 0; k < 4; ++k) bmat(m, k) = basis[k].coeffs(m);

  Eigen::FullPivLU<Mat4> lu(bmat);
  lu.setThreshold(1e-10);
  if (!lu.isInvertible())
    throw SingularBasis("basis coefficient matrix over {1, y, z, yz} is "
                        "singular within tolerance 1e-10");

  // Split p by the x bit: index bits are (x, y, z) = (bit0, bit1, bit2),
  // so the (y, z) monomial m sits at p index m<<1, and m<<1|1 with x.
  Vec4 without_x, with_x;
  for (int m = 0; m < 4; ++m) {
    without_x(m) = p.coeffs(m << 1);
    with_x(m) = p.coeffs((m << 1) | 1);
  }
  const Vec4 alpha = lu.solve(without_x);
  const Vec4 beta = lu.solve(with_x);

  const double magnitude = std::max(1.0, p.coeffs.cwiseAbs().maxCoeff());
  if ((bmat * alpha - without_x).cwiseAbs().maxCoeff() > 1e-12 * magnitude ||
      (bmat * beta - with_x).cwiseAbs().maxCoeff() > 1e-12 * magnitude)
    throw SingularBasis("regrouping residual exceeds 1e-12; basis is too "
                        "ill-conditioned");

  std::array<std::pair<complex_t, complex_t>, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = {alpha(k), beta(k)};
  return out;
}

namespace {
MultilinearPoly combine(const MultilinearPoly& a, const MultilinearPoly& b,
                        double sign) {
  if (a.nvars != b.nvars)
    throw BadArity("polynomial sum: mismatched variable counts");
  return MultilinearPoly{a.nvars, a.coeffs + sign * b.coeffs};
}
} // namespace

MultilinearPoly operator+(const MultilinearPoly& a, const MultilinearPoly& b) {
  return combine(a, b, 1.0);
}

MultilinearPoly operator-(const MultilinearPoly& a, const MultilinearPoly& b) {
  return combine(a, b, -1.0);
}

MultilinearPoly operator*(complex_t scale, const MultilinearPoly& p) {
  return MultilinearPoly{p.nvars, scale * p.coeffs};
}

std::string monomial_name(int index) {
  if (index == 0) return "1";
  static const char* named[] = {"x", "y", "z"};
  std::string out;
  for (int j = 0; index >> j; ++j) {
    if (!((index >> j) & 1)) continue;
    if (!out.empty()) out += "*";
    out += j < 3 ? named[j] : "v" + std::to_string(j);
  }
  return out;
}

std::string to_string(const MultilinearPoly& p) {
  check_poly(p, "to_string");
  std::string out;
  char buf[96];
  for (Eigen::Index m = 0; m < p.coeffs.size(); ++m) {
    const complex_t c = p.coeffs(m);
    if (c.real() == 0.0 && c.imag() == 0.0) continue;
    if (!out.empty()) out += " + ";
    bool unit = c.real() == 1.0 && c.imag() == 0.0;
    if (!unit || m == 0) {
      if (c.imag() == 0.0)
        std::snprintf(buf, sizeof buf, "%.17g", c.real());
      else
        std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)", c.real(), c.imag());
      out += buf;
    }
    if (m != 0) {
      if (!unit) out += "*";
      out += monomial_name(static_cast<int>(m));
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace qpoly
