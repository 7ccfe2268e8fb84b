#include "qpoly/geometry.hpp"

#include <cmath>
#include <cstdio>

#include "qpoly/errors.hpp"

namespace qpoly {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double grid_point(const GridSpec& grid, int i) {
  double step = (grid.max - grid.min) / (grid.n - 1);
  return grid.min + i * step;
}

} // namespace

SurfaceMesh sample_mesh(const MultilinearPoly& p, const GridSpec& grid) {
  if (p.nvars != 2) {
    throw WrongArity("sample_mesh needs a bilinear polynomial, got nvars = " +
                     std::to_string(p.nvars));
  }
  if (grid.n < 2 || !(grid.min < grid.max)) {
    throw BadGrid("grid needs min < max and n >= 2");
  }
  for (int m = 0; m < 4; ++m) {
    if (std::abs(p.coeffs(m).imag()) > 1e-12) {
      throw ComplexCoefficients("coefficient " + std::to_string(m) +
                                " has |imag| > 1e-12");
    }
  }

  double c0 = p.coeffs(0).real();
  double cx = p.coeffs(1).real();
  double cy = p.coeffs(2).real();
  double cxy = p.coeffs(3).real();

  SurfaceMesh mesh;
  mesh.grid = grid;
  mesh.heights.resize(grid.n, grid.n);
  for (int r = 0; r < grid.n; ++r) {
    double y = grid_point(grid, r);
    for (int c = 0; c < grid.n; ++c) {
      double x = grid_point(grid, c);
      mesh.heights(r, c) = c0 + cx * x + cy * y + cxy * x * y;
    }
  }
  return mesh;
}

std::string export_mesh(const SurfaceMesh& mesh, MeshFormat format) {
  const GridSpec& grid = mesh.grid;
  std::string out;
  out.reserve(static_cast<size_t>(grid.n) * grid.n * 32);

  if (format == MeshFormat::Csv) {
    out += "x,y,z\n";
    for (int r = 0; r < grid.n; ++r) {
      double y = grid_point(grid, r);
      for (int c = 0; c < grid.n; ++c) {
        double x = grid_point(grid, c);
        out += fmt(x);
        out += ',';
        out += fmt(y);
        out += ',';
        out += fmt(mesh.heights(r, c));
        out += '\n';
      }
    }
    return out;
  }

  for (int r = 0; r < grid.n; ++r) {
    double y = grid_point(grid, r);
    for (int c = 0; c < grid.n; ++c) {
      double x = grid_point(grid, c);
      out += "v ";
      out += fmt(x);
      out += ' ';
      out += fmt(y);
      out += ' ';
      out += fmt(mesh.heights(r, c));
      out += '\n';
    }
  }
  // Two triangles per cell, both counterclockwise seen from +z. Vertex
  // (r, c) has 1-based index r*n + c + 1.
  char buf[96];
  for (int r = 0; r + 1 < grid.n; ++r) {
    for (int c = 0; c + 1 < grid.n; ++c) {
      int i00 = r * grid.n + c + 1;
      int i01 = i00 + 1;
      int i10 = i00 + grid.n;
      int i11 = i10 + 1;
      std::snprintf(buf, sizeof(buf), "f %d %d %d\nf %d %d %d\n",
                    i00, i01, i11, i00, i11, i10);
      out += buf;
    }
  }
  return out;
}

} // namespace qpoly
