#ifndef MDFLOW_MESH_HPP
#define MDFLOW_MESH_HPP

#include <array>
#include <vector>

#include "mdflow/geometry.hpp"

namespace mdflow {

/// Role of a mesh face in the coupled problem.
enum class FaceTag {
  Interior,   ///< shared by two cells of the same mesh
  Dirichlet,  ///< external boundary, prescribed pressure
  Neumann,    ///< external boundary, prescribed flux density
  Tip,        ///< immersed boundary of a lower-dimensional mesh, zero flux
  Internal    ///< boundary facing a mortar interface one dimension down
};

/// Conforming simplicial mesh of dimension 0, 1 or 2 embedded in ambient
/// dimension 2 or 3. Faces ((dim-1)-simplices; single nodes for dim == 1) are
/// derived deterministically: scanning cells in order, local face i of a cell
/// is the simplex obtained by dropping local node i, and a face is numbered
/// when first encountered. Zero-dimensional meshes consist of point cells
/// with volume 1 (counting measure), diameter 0 and no faces; faces of
/// one-dimensional meshes are points with area 1.
struct SimplexMesh {
  int ambient_dim = 2;
  int dim = 2;
  std::vector<Vec> nodes;
  std::vector<int> cells;  ///< (dim+1) node ids per cell, dim == 0: one id

  // Derived connectivity and geometry, filled by compute_geometry().
  std::vector<int> faces;                        ///< dim node ids per face
  std::vector<std::array<int, 2>> face_cells;    ///< [owner, neighbor or -1]
  std::vector<int> cell_faces;                   ///< (dim+1) per cell
  std::vector<double> cell_volume;
  std::vector<double> cell_diameter;
  std::vector<Vec> cell_centroid;
  std::vector<double> face_area;
  std::vector<Vec> face_centroid;
  std::vector<Vec> face_normal;  ///< unit, outward from face_cells[f][0]
  std::vector<FaceTag> face_tag; ///< Interior / external role per face

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_cells() const {
    return dim == 0 ? static_cast<int>(cells.size())
                    : static_cast<int>(cells.size()) / (dim + 1);
  }
  int num_faces() const {
    return dim <= 0 ? 0 : static_cast<int>(faces.size()) / std::max(dim, 1);
  }
  int cell_node(int c, int i) const { return cells[c * (dim + 1) + i]; }
  int face_node(int f, int i) const { return faces[f * dim + i]; }
  int cell_face(int c, int i) const { return cell_faces[c * (dim + 1) + i]; }

  /// +1 if the stored normal of face f points out of cell c, else -1.
  double face_sign(int f, int c) const {
    return face_cells[f][0] == c ? 1.0 : -1.0;
  }

  /// Physical point of barycentric coordinates `bary` inside cell c.
  Vec cell_point(int c, const double* bary) const;

  /// Builds faces, adjacency, measures, centroids, diameters and normals.
  /// Boundary faces are tagged Dirichlet by default; callers retag.
  void compute_geometry();
};

/// Uniform partition of the segment [a, b] into n cells (dim 1 mesh).
SimplexMesh make_segment_mesh(Vec a, Vec b, int n);

/// Single-point mesh (dim 0) used for intersection subdomains and for
/// mortars attached to them.
SimplexMesh make_point_mesh(Vec p);

}  // namespace mdflow

#endif
