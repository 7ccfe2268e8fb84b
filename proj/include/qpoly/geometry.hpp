#pragma once

#include <string>

#include <Eigen/Dense>

#include "qpoly/mpoly.hpp"

namespace qpoly {

/// Square sampling grid: n points per axis, evenly spaced over [min, max]
/// on both axes.
struct GridSpec {
  double min = -2.0;
  double max = 2.0;
  int n = 25;
};

/// Height field z = p(x, y) sampled on a grid; heights(r, c) is the value at
/// (x_c, y_r), so rows sweep y and columns sweep x.
struct SurfaceMesh {
  GridSpec grid;
  Eigen::MatrixXd heights;
};

enum class MeshFormat { Obj, Csv };

/// Samples a real bilinear polynomial on the grid. Throws WrongArity unless
/// p has exactly two variables, ComplexCoefficients when any coefficient has
/// |imag| > 1e-12, and BadGrid for n < 2 or min >= max.
SurfaceMesh sample_mesh(const MultilinearPoly& p, const GridSpec& grid);

/// Serializes a mesh. Obj output is a triangulated surface (two CCW-from-+z
/// triangles per grid cell); Csv output is one "x,y,z" row per vertex in
/// row-major order. Numbers are printed with %.17g.
std::string export_mesh(const SurfaceMesh& mesh, MeshFormat format);

} // namespace qpoly
