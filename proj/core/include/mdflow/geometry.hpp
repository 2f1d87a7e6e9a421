#ifndef MDFLOW_GEOMETRY_HPP
#define MDFLOW_GEOMETRY_HPP

#include <array>
#include <cmath>

namespace mdflow {

/// Point or vector in ambient space. Always stores three components; meshes
/// with ambient_dim == 2 keep z == 0 so the same kernels serve both cases.
struct Vec {
  double x = 0.0, y = 0.0, z = 0.0;

  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec operator*(double s, Vec a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec operator/(Vec a, double s) { return {a.x / s, a.y / s, a.z / s}; }
inline Vec& operator+=(Vec& a, Vec b) { a = a + b; return a; }

inline double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec a) { return std::sqrt(dot(a, a)); }
inline Vec normalized(Vec a) { return (1.0 / norm(a)) * a; }
inline Vec cross(Vec a, Vec b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Diagonal permeability tensor, cellwise constant. Scalar permeability k is
/// stored as kxx = kyy = kzz = k; for 1-d cells only the tangential value kxx
/// is meaningful and the tensor acts as the scalar kxx.
struct DiagTensor {
  double xx = 1.0, yy = 1.0, zz = 1.0;

  static DiagTensor scalar(double k) { return {k, k, k}; }

  Vec apply(Vec v) const { return {xx * v.x, yy * v.y, zz * v.z}; }
  Vec apply_inverse(Vec v) const { return {v.x / xx, v.y / yy, v.z / zz}; }

  /// Action on vectors attached to a cell of dimension `cell_dim`. Cells of
  /// lower dimension than the ambient space carry a tangential scalar (xx),
  /// applied isotropically so arbitrary segment orientations are supported.
  Vec apply(Vec v, int cell_dim, int ambient_dim) const {
    return cell_dim < ambient_dim ? xx * v : apply(v);
  }
  Vec apply_inverse(Vec v, int cell_dim, int ambient_dim) const {
    return cell_dim < ambient_dim ? (1.0 / xx) * v : apply_inverse(v);
  }

  /// Smallest/largest eigenvalue restricted to the first `dim` axes.
  double min_eig(int dim) const {
    double m = xx;
    if (dim >= 2) m = std::min(m, yy);
    if (dim >= 3) m = std::min(m, zz);
    return m;
  }
  double max_eig(int dim) const {
    double m = xx;
    if (dim >= 2) m = std::max(m, yy);
    if (dim >= 3) m = std::max(m, zz);
    return m;
  }
};

}  // namespace mdflow

#endif
