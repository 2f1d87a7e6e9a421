#include "mdflow/discretize.hpp"

#include <cmath>
#include <stdexcept>

#include "mdflow/quadrature.hpp"

namespace mdflow {

ProblemData ProblemData::uniform(const MDGrid& grid, double k, double kappa) {
  ProblemData data;
  for (const auto& sub : grid.subdomains) {
    SubdomainData sd;
    sd.K.assign(sub.mesh.num_cells(), DiagTensor::scalar(k));
    sd.f_cell.assign(sub.mesh.num_cells(), 0.0);
    sd.dirichlet = [](Vec) { return 0.0; };
    data.subdomain.push_back(std::move(sd));
  }
  for (const auto& itf : grid.interfaces) {
    InterfaceData id;
    id.kappa.assign(itf.mortar.num_cells(), kappa);
    data.interface_.push_back(std::move(id));
  }
  return data;
}

double source_integral(const SimplexMesh& mesh, const SubdomainData& data, int c) {
  if (!data.f_fun) return data.f_cell[c] * mesh.cell_volume[c];
  const auto& rule = simplex_rule(mesh.dim, 4);
  double s = 0.0;
  for (int q = 0; q < rule.size(); ++q)
    s += rule.weights[q] * data.f_fun(mesh.cell_point(c, rule.point(q)));
  return s * mesh.cell_volume[c];
}

namespace {

/// Half transmissibility of cell c through face f per unit face area:
/// (n^T K n) / dist(centroid, face plane).
double half_conductance(const SimplexMesh& mesh, const DiagTensor& K, int c, int f) {
  Vec n = mesh.face_normal[f];
  Vec d = mesh.face_centroid[f] - mesh.cell_centroid[c];
  double dist = std::abs(dot(d, n));
  Vec Kn = K.apply(n, mesh.dim, mesh.ambient_dim);
  return dot(n, Kn) / dist;
}

double harmonic(double a, double b) { return a * b / (a + b); }

/// Without a Dirichlet face somewhere in the network the pressure is only
/// determined up to a constant and the system is singular.
void require_dirichlet(const MDGrid& grid) {
  for (const auto& sub : grid.subdomains)
    for (FaceTag tag : sub.mesh.face_tag)
      if (tag == FaceTag::Dirichlet) return;
  throw std::invalid_argument("singular system (no Dirichlet boundary)");
}

struct Builder {
  LinearSystem sys;
  void add(int r, int c, double v) {
    sys.rows.push_back(r);
    sys.cols.push_back(c);
    sys.vals.push_back(v);
  }
};

}  // namespace

LinearSystem assemble_tpfa(const MDGrid& grid, const ProblemData& data) {
  require_dirichlet(grid);
  Builder b;
  b.sys.method = Method::Tpfa;

  int n = 0;
  for (const auto& sub : grid.subdomains) {
    b.sys.cell_offset.push_back(n);
    n += sub.mesh.num_cells();
  }
  for (const auto& itf : grid.interfaces) {
    b.sys.mortar_offset.push_back(n);
    n += itf.mortar.num_cells();
  }
  b.sys.n = n;
  b.sys.rhs.assign(n, 0.0);

  for (size_t s = 0; s < grid.subdomains.size(); ++s) {
    const auto& mesh = grid.subdomains[s].mesh;
    const auto& sd = data.subdomain[s];
    const int p0 = b.sys.cell_offset[s];

    for (int c = 0; c < mesh.num_cells(); ++c)
      b.sys.rhs[p0 + c] += source_integral(mesh, sd, c);

    for (int f = 0; f < mesh.num_faces(); ++f) {
      const int cL = mesh.face_cells[f][0], cR = mesh.face_cells[f][1];
      const double area = mesh.face_area[f];
      switch (mesh.face_tag[f]) {
        case FaceTag::Interior: {
          double t = area * harmonic(half_conductance(mesh, sd.K[cL], cL, f),
                                     half_conductance(mesh, sd.K[cR], cR, f));
          b.add(p0 + cL, p0 + cL, t);
          b.add(p0 + cL, p0 + cR, -t);
          b.add(p0 + cR, p0 + cR, t);
          b.add(p0 + cR, p0 + cL, -t);
          break;
        }
        case FaceTag::Dirichlet: {
          double t = area * half_conductance(mesh, sd.K[cL], cL, f);
          b.add(p0 + cL, p0 + cL, t);
          b.sys.rhs[p0 + cL] += t * sd.dirichlet(mesh.face_centroid[f]);
          break;
        }
        case FaceTag::Neumann:
          b.sys.rhs[p0 + cL] -= area * sd.neumann(mesh.face_centroid[f]);
          break;
        case FaceTag::Tip:
        case FaceTag::Internal:
          break;  // interface faces are coupled through the mortar rows
      }
    }
  }

  for (size_t i = 0; i < grid.interfaces.size(); ++i) {
    const auto& itf = grid.interfaces[i];
    const auto& higher = grid.subdomains[itf.higher];
    const auto& hd = data.subdomain[itf.higher];
    const int m0 = b.sys.mortar_offset[i];
    const int ph = b.sys.cell_offset[itf.higher];
    const int pl = b.sys.cell_offset[itf.lower];

    // Mass balance couplings: outward interface flux for the higher cell,
    // flux jump for the lower cell.
    for (const auto& o : itf.higher_faces) {
      int c = higher.mesh.face_cells[o.entity][0];
      b.add(ph + c, m0 + o.mortar_cell, o.measure);
    }
    for (const auto& o : itf.lower_cells)
      b.add(pl + o.entity, m0 + o.mortar_cell, -o.measure);

    // Interface law per mortar cell: |m| lambda = sum_f T_mf p_higher(f)
    // - G_m * (average lower pressure), T_mf the harmonic combination of the
    // higher-side half transmissibility and kappa on the overlap.
    std::vector<double> g(itf.mortar.num_cells(), 0.0);
    for (const auto& o : itf.higher_faces) {
      int c = higher.mesh.face_cells[o.entity][0];
      double t = o.measure * harmonic(half_conductance(higher.mesh, hd.K[c], c, o.entity),
                                      data.interface_[i].kappa[o.mortar_cell]);
      b.add(m0 + o.mortar_cell, ph + c, -t);
      g[o.mortar_cell] += t;
    }
    for (int m = 0; m < itf.mortar.num_cells(); ++m)
      b.add(m0 + m, m0 + m, itf.mortar.cell_volume[m]);
    for (const auto& o : itf.lower_cells)
      b.add(m0 + o.mortar_cell, pl + o.entity,
            g[o.mortar_cell] * o.measure / itf.mortar.cell_volume[o.mortar_cell]);
  }
  return b.sys;
}

namespace {

/// Exact K^{-1}-weighted RT0 mass matrix of cell c in global orientation.
/// basis_f(x) = sign_f (x - P_f) / (dim |K|), P_f the vertex opposite face f.
void rt0_mass_matrix(const SimplexMesh& mesh, const DiagTensor& K, int c,
                     double M[3][3]) {
  const int d = mesh.dim, nl = d + 1;
  const double scale = 1.0 / (d * mesh.cell_volume[c]);
  const auto& rule = simplex_rule(d, 2);
  for (int a = 0; a < nl; ++a)
    for (int bb = 0; bb < nl; ++bb) M[a][bb] = 0.0;
  for (int q = 0; q < rule.size(); ++q) {
    Vec x = mesh.cell_point(c, rule.point(q));
    Vec phi[3];
    for (int a = 0; a < nl; ++a) {
      int fa = mesh.cell_face(c, a);
      double s = mesh.face_sign(fa, c);
      phi[a] = (s * scale) * (x - mesh.nodes[mesh.cell_node(c, a)]);
    }
    for (int a = 0; a < nl; ++a) {
      Vec kinv_phi = K.apply_inverse(phi[a], d, mesh.ambient_dim);
      for (int bb = 0; bb < nl; ++bb)
        M[a][bb] += rule.weights[q] * dot(kinv_phi, phi[bb]);
    }
  }
  for (int a = 0; a < nl; ++a)
    for (int bb = 0; bb < nl; ++bb) M[a][bb] *= mesh.cell_volume[c];
}

struct FaceClosure {
  // Column/row expansion of a face flux in the RT0 system: either a set of
  // unknown couplings or a known value moved to the right-hand side.
  std::vector<std::pair<int, double>> unknowns;
  double known = 0.0;
};

}  // namespace

LinearSystem assemble_rt0p0(const MDGrid& grid, const ProblemData& data) {
  require_dirichlet(grid);
  Builder b;
  b.sys.method = Method::Rt0p0;

  int n = 0;
  b.sys.flux_index.resize(grid.subdomains.size());
  for (size_t s = 0; s < grid.subdomains.size(); ++s) {
    const auto& mesh = grid.subdomains[s].mesh;
    auto& fidx = b.sys.flux_index[s];
    fidx.assign(mesh.num_faces(), -1);
    for (int f = 0; f < mesh.num_faces(); ++f)
      if (mesh.face_tag[f] == FaceTag::Interior ||
          mesh.face_tag[f] == FaceTag::Dirichlet)
        fidx[f] = n++;
  }
  for (const auto& sub : grid.subdomains) {
    b.sys.cell_offset.push_back(n);
    n += sub.mesh.num_cells();
  }
  for (const auto& itf : grid.interfaces) {
    b.sys.mortar_offset.push_back(n);
    n += itf.mortar.num_cells();
  }
  b.sys.n = n;
  b.sys.rhs.assign(n, 0.0);

  // Face closures: interface faces expand into mortar unknowns weighted by
  // overlap measures, Neumann/Tip faces carry known data.
  std::vector<std::vector<FaceClosure>> closure(grid.subdomains.size());
  for (size_t s = 0; s < grid.subdomains.size(); ++s) {
    const auto& mesh = grid.subdomains[s].mesh;
    closure[s].resize(mesh.num_faces());
    for (int f = 0; f < mesh.num_faces(); ++f) {
      auto& cl = closure[s][f];
      switch (mesh.face_tag[f]) {
        case FaceTag::Interior:
        case FaceTag::Dirichlet:
          cl.unknowns.push_back({b.sys.flux_index[s][f], 1.0});
          break;
        case FaceTag::Neumann:
          cl.known = mesh.face_area[f] *
                     data.subdomain[s].neumann(mesh.face_centroid[f]);
          break;
        case FaceTag::Tip:
          break;
        case FaceTag::Internal:
          break;  // filled from overlaps below
      }
    }
  }
  for (size_t i = 0; i < grid.interfaces.size(); ++i) {
    const auto& itf = grid.interfaces[i];
    for (const auto& o : itf.higher_faces)
      closure[itf.higher][o.entity].unknowns.push_back(
          {b.sys.mortar_offset[i] + o.mortar_cell, o.measure});
  }

  for (size_t s = 0; s < grid.subdomains.size(); ++s) {
    const auto& mesh = grid.subdomains[s].mesh;
    const auto& sd = data.subdomain[s];
    const int p0 = b.sys.cell_offset[s];
    double M[3][3];

    for (int c = 0; c < mesh.num_cells(); ++c) {
      b.sys.rhs[p0 + c] -= source_integral(mesh, sd, c);  // negated mass rows
      if (mesh.dim == 0) continue;
      rt0_mass_matrix(mesh, sd.K[c], c, M);

      for (int a = 0; a <= mesh.dim; ++a) {
        const int fa = mesh.cell_face(c, a);
        const auto& ra = closure[s][fa];
        const double sa = mesh.face_sign(fa, c);

        // Flux-flux block (K^{-1} u, v) with substitution on rows and columns.
        for (int bb = 0; bb <= mesh.dim; ++bb) {
          const int fb = mesh.cell_face(c, bb);
          const auto& cb = closure[s][fb];
          for (const auto& [r, wr] : ra.unknowns) {
            for (const auto& [cc, wc] : cb.unknowns) b.add(r, cc, wr * M[a][bb] * wc);
            b.sys.rhs[r] -= wr * M[a][bb] * cb.known;
          }
        }

        // Pressure coupling -(p, div v): -s_a p_c in face a's equation and
        // its transpose in the (negated) mass row of cell c.
        for (const auto& [r, wr] : ra.unknowns) {
          b.add(r, p0 + c, -wr * sa);
          b.add(p0 + c, r, -wr * sa);
        }
        b.sys.rhs[p0 + c] += sa * ra.known;

        // Dirichlet data enters the free boundary-face equations naturally.
        if (mesh.face_tag[fa] == FaceTag::Dirichlet)
          b.sys.rhs[b.sys.flux_index[s][fa]] -=
              sa * sd.dirichlet(mesh.face_centroid[fa]);
      }
    }
  }

  // Interface law: kappa^{-1} lambda weighted by mortar measure, plus the
  // lower-side pressure average (symmetric counterpart of the jump term in
  // the negated lower-cell mass rows).
  for (size_t i = 0; i < grid.interfaces.size(); ++i) {
    const auto& itf = grid.interfaces[i];
    const int m0 = b.sys.mortar_offset[i];
    const int pl = b.sys.cell_offset[itf.lower];
    for (int m = 0; m < itf.mortar.num_cells(); ++m)
      b.add(m0 + m, m0 + m,
            itf.mortar.cell_volume[m] / data.interface_[i].kappa[m]);
    for (const auto& o : itf.lower_cells) {
      b.add(m0 + o.mortar_cell, pl + o.entity, o.measure);
      b.add(pl + o.entity, m0 + o.mortar_cell, o.measure);
    }
  }
  return b.sys;
}

void rt0_extend_fluxes(const MDGrid& grid, const ProblemData& data,
                       DiscreteSolution& sol) {
  if (sol.method == Method::Rt0p0) return;
  sol.face_flux.resize(grid.subdomains.size());
  for (size_t s = 0; s < grid.subdomains.size(); ++s) {
    const auto& mesh = grid.subdomains[s].mesh;
    const auto& sd = data.subdomain[s];
    const auto& p = sol.pressure[s];
    auto& flux = sol.face_flux[s];
    flux.assign(mesh.num_faces(), 0.0);
    for (int f = 0; f < mesh.num_faces(); ++f) {
      const int cL = mesh.face_cells[f][0], cR = mesh.face_cells[f][1];
      const double area = mesh.face_area[f];
      switch (mesh.face_tag[f]) {
        case FaceTag::Interior:
          flux[f] = area * harmonic(half_conductance(mesh, sd.K[cL], cL, f),
                                    half_conductance(mesh, sd.K[cR], cR, f)) *
                    (p[cL] - p[cR]);
          break;
        case FaceTag::Dirichlet:
          flux[f] = area * half_conductance(mesh, sd.K[cL], cL, f) *
                    (p[cL] - sd.dirichlet(mesh.face_centroid[f]));
          break;
        case FaceTag::Neumann:
          flux[f] = area * sd.neumann(mesh.face_centroid[f]);
          break;
        case FaceTag::Tip:
          flux[f] = 0.0;
          break;
        case FaceTag::Internal:
          break;  // filled from mortar overlaps below
      }
    }
  }
  for (size_t i = 0; i < grid.interfaces.size(); ++i) {
    const auto& itf = grid.interfaces[i];
    const auto& lam = sol.mortar[i];
    for (const auto& o : itf.higher_faces)
      sol.face_flux[itf.higher][o.entity] += o.measure * lam[o.mortar_cell];
  }
}

Vec rt0_value(const SimplexMesh& mesh, const std::vector<double>& face_flux,
              int c, Vec x) {
  Vec u{};
  if (mesh.dim == 0) return u;
  const double scale = 1.0 / (mesh.dim * mesh.cell_volume[c]);
  for (int a = 0; a <= mesh.dim; ++a) {
    const int f = mesh.cell_face(c, a);
    const double s = mesh.face_sign(f, c);
    u += (s * face_flux[f] * scale) * (x - mesh.nodes[mesh.cell_node(c, a)]);
  }
  return u;
}

double rt0_divergence(const SimplexMesh& mesh,
                      const std::vector<double>& face_flux, int c) {
  if (mesh.dim == 0) return 0.0;
  double div = 0.0;
  for (int a = 0; a <= mesh.dim; ++a) {
    const int f = mesh.cell_face(c, a);
    div += mesh.face_sign(f, c) * face_flux[f];
  }
  return div / mesh.cell_volume[c];
}

std::vector<std::vector<double>> check_local_conservation(
    const MDGrid& grid, const ProblemData& data, const DiscreteSolution& sol) {
  std::vector<std::vector<double>> defect(grid.subdomains.size());
  for (size_t s = 0; s < grid.subdomains.size(); ++s) {
    const auto& mesh = grid.subdomains[s].mesh;
    defect[s].assign(mesh.num_cells(), 0.0);
    for (int c = 0; c < mesh.num_cells(); ++c) {
      double out = 0.0;
      if (mesh.dim > 0)
        for (int a = 0; a <= mesh.dim; ++a) {
          int f = mesh.cell_face(c, a);
          out += mesh.face_sign(f, c) * sol.face_flux[s][f];
        }
      defect[s][c] = out - source_integral(mesh, data.subdomain[s], c);
    }
  }
  for (const auto& itf : grid.interfaces) {
    const auto& lam = sol.mortar[itf.id];
    for (const auto& o : itf.lower_cells)
      defect[itf.lower][o.entity] -= o.measure * lam[o.mortar_cell];
  }
  return defect;
}

}  // namespace mdflow
