#include "mdflow/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mdflow {

Vec SimplexMesh::cell_point(int c, const double* bary) const {
  Vec p{0.0, 0.0, 0.0};
  for (int i = 0; i <= dim; ++i) p += bary[i] * nodes[cell_node(c, i)];
  return p;
}

namespace {

double simplex_measure(const SimplexMesh& m, const int* nds, int k) {
  // Measure of the k-simplex spanned by nds[0..k] (k = 0 -> counting measure).
  if (k == 0) return 1.0;
  if (k == 1) return norm(m.nodes[nds[1]] - m.nodes[nds[0]]);
  if (k == 2) {
    Vec e1 = m.nodes[nds[1]] - m.nodes[nds[0]];
    Vec e2 = m.nodes[nds[2]] - m.nodes[nds[0]];
    return 0.5 * norm(cross(e1, e2));
  }
  throw std::invalid_argument("simplex_measure: unsupported dimension");
}

}  // namespace

void SimplexMesh::compute_geometry() {
  const int nc = num_cells();
  cell_volume.assign(nc, 0.0);
  cell_diameter.assign(nc, 0.0);
  cell_centroid.assign(nc, Vec{});

  for (int c = 0; c < nc; ++c) {
    const int* nds = &cells[c * (dim + 1)];
    cell_volume[c] = simplex_measure(*this, nds, dim);
    Vec ctr{};
    for (int i = 0; i <= dim; ++i) ctr += nodes[nds[i]];
    cell_centroid[c] = (1.0 / (dim + 1)) * ctr;
    double diam = 0.0;
    for (int i = 0; i <= dim; ++i)
      for (int j = i + 1; j <= dim; ++j)
        diam = std::max(diam, norm(nodes[nds[i]] - nodes[nds[j]]));
    cell_diameter[c] = diam;
    if (dim > 0 && !(cell_volume[c] > 0.0))
      throw std::runtime_error("compute_geometry: degenerate cell");
  }

  faces.clear();
  face_cells.clear();
  cell_faces.assign(nc * (dim + 1), -1);
  if (dim == 0) {
    face_area.clear();
    face_centroid.clear();
    face_normal.clear();
    face_tag.clear();
    return;
  }

  // Deterministic face enumeration keyed by sorted node tuples.
  std::map<std::array<int, 2>, int> index;
  for (int c = 0; c < nc; ++c) {
    for (int i = 0; i <= dim; ++i) {
      std::array<int, 2> key = {-1, -1};
      int fn[2] = {-1, -1};
      int k = 0;
      for (int j = 0; j <= dim; ++j)
        if (j != i) fn[k++] = cell_node(c, j);
      key = {fn[0], dim == 2 ? fn[1] : -1};
      if (dim == 2 && key[0] > key[1]) std::swap(key[0], key[1]);
      auto it = index.find(key);
      int f;
      if (it == index.end()) {
        f = static_cast<int>(face_cells.size());
        index.emplace(key, f);
        for (int j = 0; j < dim; ++j) faces.push_back(fn[j]);
        face_cells.push_back({c, -1});
      } else {
        f = it->second;
        if (face_cells[f][1] != -1)
          throw std::runtime_error("compute_geometry: face shared by 3 cells");
        face_cells[f][1] = c;
      }
      cell_faces[c * (dim + 1) + i] = f;
    }
  }

  const int nf = num_faces();
  face_area.assign(nf, 0.0);
  face_centroid.assign(nf, Vec{});
  face_normal.assign(nf, Vec{});
  face_tag.assign(nf, FaceTag::Interior);

  for (int f = 0; f < nf; ++f) {
    const int* nds = &faces[f * dim];
    face_area[f] = simplex_measure(*this, nds, dim - 1);
    Vec ctr{};
    for (int i = 0; i < dim; ++i) ctr += nodes[nds[i]];
    face_centroid[f] = (1.0 / dim) * ctr;

    Vec n{};
    if (dim == 2) {
      Vec t = nodes[nds[1]] - nodes[nds[0]];
      n = normalized(Vec{t.y, -t.x, 0.0});
    } else {
      // Point face of a segment: outward unit tangent of the owner cell.
      n = Vec{1.0, 0.0, 0.0};
    }
    int owner = face_cells[f][0];
    Vec out = face_centroid[f] - cell_centroid[owner];
    if (dim == 1) n = normalized(out);
    if (dot(n, out) < 0.0) n = -1.0 * n;
    face_normal[f] = n;
    if (face_cells[f][1] == -1) face_tag[f] = FaceTag::Dirichlet;
  }
}

SimplexMesh make_segment_mesh(Vec a, Vec b, int n) {
  if (n < 1) throw std::invalid_argument("make_segment_mesh: need n >= 1");
  SimplexMesh m;
  m.dim = 1;
  m.ambient_dim = 2;
  for (int i = 0; i <= n; ++i)
    m.nodes.push_back(a + (static_cast<double>(i) / n) * (b - a));
  for (int i = 0; i < n; ++i) {
    m.cells.push_back(i);
    m.cells.push_back(i + 1);
  }
  m.compute_geometry();
  return m;
}

SimplexMesh make_point_mesh(Vec p) {
  SimplexMesh m;
  m.dim = 0;
  m.ambient_dim = 2;
  m.nodes.push_back(p);
  m.cells.push_back(0);
  m.compute_geometry();
  return m;
}

}  // namespace mdflow
