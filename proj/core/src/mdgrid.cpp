#include "mdflow/mdgrid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mdflow {

double MDGrid::domain_diameter() const {
  Vec lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
  for (const auto& sub : subdomains) {
    for (const auto& p : sub.mesh.nodes) {
      for (int k = 0; k < 3; ++k) {
        lo[k] = std::min(lo[k], p[k]);
        hi[k] = std::max(hi[k], p[k]);
      }
    }
  }
  return norm(hi - lo);
}

namespace {

struct Interval {
  double lo, hi;
};

Interval param_interval(const SimplexMesh& m, const int* nds, int count,
                        Vec origin, Vec dir) {
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i < count; ++i) {
    double t = dot(m.nodes[nds[i]] - origin, dir);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return {lo, hi};
}

void overlap_1d(const SimplexMesh& mortar,
                const std::vector<std::pair<int, Interval>>& entities,
                double tol, std::vector<Overlap>& out) {
  Vec origin = mortar.nodes.front();
  Vec far = origin;
  double best = -1.0;
  for (const auto& p : mortar.nodes) {
    double d = norm(p - origin);
    if (d > best) {
      best = d;
      far = p;
    }
  }
  Vec dir = normalized(far - origin);
  for (int mc = 0; mc < mortar.num_cells(); ++mc) {
    Interval im = param_interval(mortar, &mortar.cells[mc * 2], 2, origin, dir);
    for (const auto& [ent, ie] : entities) {
      double lo = std::max(im.lo, ie.lo);
      double hi = std::min(im.hi, ie.hi);
      if (hi - lo > tol) out.push_back({mc, ent, hi - lo});
    }
  }
}

void check_partition(const std::vector<Overlap>& overlaps, bool by_mortar,
                     const std::vector<double>& measures, const char* what) {
  std::vector<double> sum(measures.size(), 0.0);
  for (const auto& o : overlaps) sum[by_mortar ? o.mortar_cell : o.entity] += o.measure;
  for (size_t i = 0; i < measures.size(); ++i) {
    if (std::abs(sum[i] - measures[i]) > 1e-12 * std::max(1.0, measures[i]))
      throw std::runtime_error(std::string("overlap partition failed for ") +
                               what + " " + std::to_string(i));
  }
}

}  // namespace

void compute_overlaps(MDGrid& grid) {
  const double tol = grid.tol();
  for (auto& itf : grid.interfaces) {
    auto& higher = grid.subdomains[itf.higher];
    auto& lower = grid.subdomains[itf.lower];
    itf.higher_faces.clear();
    itf.lower_cells.clear();

    std::vector<int> faces;
    for (int f = 0; f < higher.mesh.num_faces(); ++f)
      if (higher.mesh.face_tag[f] == FaceTag::Internal &&
          higher.face_interface[f] == itf.id)
        faces.push_back(f);

    if (itf.mortar.dim == 0) {
      // Point interface: one mortar cell, one higher face, one lower cell,
      // all with counting measure 1.
      if (faces.size() != 1 || itf.mortar.num_cells() != 1 ||
          lower.mesh.num_cells() != 1)
        throw std::runtime_error("point interface must connect single cells");
      itf.higher_faces.push_back({0, faces[0], 1.0});
      itf.lower_cells.push_back({0, 0, 1.0});
      continue;
    }

    Vec origin = itf.mortar.nodes.front();
    Vec far = origin;
    for (const auto& p : itf.mortar.nodes)
      if (norm(p - origin) > norm(far - origin)) far = p;
    Vec dir = normalized(far - origin);

    std::vector<std::pair<int, Interval>> fents, cents;
    for (int f : faces) {
      for (int i = 0; i < higher.mesh.dim; ++i) {
        Vec p = higher.mesh.nodes[higher.mesh.face_node(f, i)];
        Vec off = p - origin;
        if (norm(off - dot(off, dir) * dir) > tol)
          throw std::runtime_error("interface face not on the mortar segment");
      }
      fents.push_back({f, param_interval(higher.mesh, &higher.mesh.faces[f * higher.mesh.dim],
                                         higher.mesh.dim, origin, dir)});
    }
    for (int c = 0; c < lower.mesh.num_cells(); ++c)
      cents.push_back({c, param_interval(lower.mesh, &lower.mesh.cells[c * 2], 2,
                                         origin, dir)});

    overlap_1d(itf.mortar, fents, tol, itf.higher_faces);
    overlap_1d(itf.mortar, cents, tol, itf.lower_cells);
  }
}

void check_mdgrid(const MDGrid& grid) {
  for (size_t s = 0; s < grid.subdomains.size(); ++s) {
    const auto& sub = grid.subdomains[s];
    if (sub.id != static_cast<int>(s))
      throw std::runtime_error("subdomain ids must equal their position");
    if (static_cast<int>(sub.face_interface.size()) != sub.mesh.num_faces())
      throw std::runtime_error("face_interface size mismatch");
    for (int f = 0; f < sub.mesh.num_faces(); ++f) {
      if (sub.mesh.face_tag[f] == FaceTag::Tip &&
          sub.mesh.dim == grid.ambient_dim)
        throw std::runtime_error("Tip tag on a top-dimensional subdomain");
      bool internal = sub.mesh.face_tag[f] == FaceTag::Internal;
      if (internal != (sub.face_interface[f] >= 0))
        throw std::runtime_error("Internal tag and face_interface disagree");
      if (!internal) continue;
      const auto& itf = grid.interfaces.at(sub.face_interface[f]);
      if (itf.higher != static_cast<int>(s))
        throw std::runtime_error("Internal face tagged with foreign interface");
    }
  }
  for (size_t i = 0; i < grid.interfaces.size(); ++i) {
    const auto& itf = grid.interfaces[i];
    if (itf.id != static_cast<int>(i))
      throw std::runtime_error("interface ids must equal their position");
    const auto& lower = grid.subdomains.at(itf.lower);
    const auto& higher = grid.subdomains.at(itf.higher);
    if (lower.mesh.dim + 1 != higher.mesh.dim)
      throw std::runtime_error("interface must connect dims one apart");
    if (itf.mortar.dim != lower.mesh.dim)
      throw std::runtime_error("mortar dimension must match the lower side");

    check_partition(itf.higher_faces, true, itf.mortar.cell_volume,
                    "mortar cell (higher side)");
    check_partition(itf.lower_cells, true, itf.mortar.cell_volume,
                    "mortar cell (lower side)");
    std::vector<double> fmeas(higher.mesh.num_faces(), 0.0);
    bool any = false;
    for (int f = 0; f < higher.mesh.num_faces(); ++f)
      if (higher.mesh.face_tag[f] == FaceTag::Internal &&
          higher.face_interface[f] == itf.id) {
        fmeas[f] = higher.mesh.face_area[f];
        any = true;
      }
    if (!any) throw std::runtime_error("interface has no Internal faces");
    std::vector<double> fsum(higher.mesh.num_faces(), 0.0);
    for (const auto& o : itf.higher_faces) fsum[o.entity] += o.measure;
    for (int f = 0; f < higher.mesh.num_faces(); ++f)
      if (fmeas[f] > 0.0 && std::abs(fsum[f] - fmeas[f]) > 1e-12 * fmeas[f])
        throw std::runtime_error("interface face not covered by mortar cells");
  }
}

MDGrid build_validation_grid(double h_boundary, double h_mortar,
                             double h_fracture) {
  auto cells_on_half = [](double h, const char* what) {
    if (!(h > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
    int n = static_cast<int>(std::lround(0.5 / h));
    if (n < 1)
      throw std::invalid_argument(std::string(what) +
                                  " yields zero cells on the fracture segment");
    return n;
  };
  const int nt = cells_on_half(h_boundary, "h_boundary");
  const int nm = cells_on_half(h_mortar, "h_mortar");
  const int nf = cells_on_half(h_fracture, "h_fracture");
  if (nt % 2 != 0)
    throw std::invalid_argument(
        "h_boundary must give an even trace cell count so the fracture "
        "endpoints are matrix grid nodes");
  const int n = 2 * nt;  // matrix squares per side of the unit square

  MDGrid grid;
  grid.ambient_dim = 2;

  // Matrix: structured n x n triangulation, nodes duplicated on the open slit.
  SimplexMesh matrix;
  matrix.dim = 2;
  matrix.ambient_dim = 2;
  const double h = 1.0 / n;
  auto base_id = [n](int i, int j) { return j * (n + 1) + i; };
  matrix.nodes.resize((n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i)
      matrix.nodes[base_id(i, j)] = Vec{i * h, j * h, 0.0};

  const int i_slit = n / 2, j_lo = n / 4, j_hi = 3 * n / 4;
  std::vector<int> dup(n + 1, -1);  // right-side copy of slit node at row j
  for (int j = j_lo + 1; j < j_hi; ++j) {
    dup[j] = matrix.num_nodes();
    matrix.nodes.push_back(matrix.nodes[base_id(i_slit, j)]);
  }
  // Cells right of the slit reference the duplicated copies.
  auto node_for = [&](int i, int j, bool right_side) {
    if (right_side && i == i_slit && dup[j] >= 0) return dup[j];
    return base_id(i, j);
  };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      bool right = i >= i_slit;  // square [i,i+1] lies right of x = 1/2
      int v00 = node_for(i, j, right), v10 = node_for(i + 1, j, right);
      int v11 = node_for(i + 1, j + 1, right), v01 = node_for(i, j + 1, right);
      matrix.cells.insert(matrix.cells.end(), {v00, v10, v11});
      matrix.cells.insert(matrix.cells.end(), {v00, v11, v01});
    }
  }
  matrix.compute_geometry();

  // Retag slit boundary faces as Internal, split by side.
  Subdomain matrix_sub;
  matrix_sub.id = 0;
  matrix_sub.mesh = std::move(matrix);
  auto& mm = matrix_sub.mesh;
  matrix_sub.face_interface.assign(mm.num_faces(), -1);
  const double tol = 1e-12;
  for (int f = 0; f < mm.num_faces(); ++f) {
    if (mm.face_cells[f][1] != -1) continue;
    Vec c = mm.face_centroid[f];
    bool on_slit = std::abs(c.x - 0.5) < tol && c.y > 0.25 - tol && c.y < 0.75 + tol;
    if (!on_slit) continue;
    bool owner_right = mm.cell_centroid[mm.face_cells[f][0]].x > 0.5;
    mm.face_tag[f] = FaceTag::Internal;
    matrix_sub.face_interface[f] = owner_right ? 0 : 1;  // 0: Plus, 1: Minus
  }

  Subdomain frac_sub;
  frac_sub.id = 1;
  frac_sub.mesh = make_segment_mesh(Vec{0.5, 0.25, 0.0}, Vec{0.5, 0.75, 0.0}, nf);
  frac_sub.face_interface.assign(frac_sub.mesh.num_faces(), -1);
  for (int f = 0; f < frac_sub.mesh.num_faces(); ++f)
    if (frac_sub.mesh.face_cells[f][1] == -1)
      frac_sub.mesh.face_tag[f] = FaceTag::Tip;

  grid.subdomains.push_back(std::move(matrix_sub));
  grid.subdomains.push_back(std::move(frac_sub));

  for (int k = 0; k < 2; ++k) {
    MortarInterface itf;
    itf.id = k;
    itf.lower = 1;
    itf.higher = 0;
    itf.side = k == 0 ? Side::Plus : Side::Minus;
    itf.mortar = make_segment_mesh(Vec{0.5, 0.25, 0.0}, Vec{0.5, 0.75, 0.0}, nm);
    grid.interfaces.push_back(std::move(itf));
  }

  compute_overlaps(grid);
  check_mdgrid(grid);
  return grid;
}

}  // namespace mdflow
