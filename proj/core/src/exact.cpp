#include "mdflow/exact.hpp"

#include <cmath>

#include "mdflow/quadrature.hpp"

namespace mdflow {

namespace {

/// Offsets to the nearest fracture point: alpha across the fracture plane,
/// beta (and gamma in 3d) zero inside the extent bands and signed distances
/// to the band edges outside. The active count is the number of nonzero
/// components plus one, which sets the source formula.
struct Offset {
  double a, b, g;
  int active;
};

Offset offsets(Vec x, bool three_d) {
  Offset o{x.x - 0.5, 0.0, 0.0, 1};
  if (x.y < 0.25) {
    o.b = x.y - 0.25;
    ++o.active;
  } else if (x.y > 0.75) {
    o.b = x.y - 0.75;
    ++o.active;
  }
  if (three_d) {
    if (x.z < 0.25) {
      o.g = x.z - 0.25;
      ++o.active;
    } else if (x.z > 0.75) {
      o.g = x.z - 0.75;
      ++o.active;
    }
  }
  return o;
}

double pressure(Vec x, bool three_d) {
  const Offset o = offsets(x, three_d);
  return std::sqrt(o.a * o.a + o.b * o.b + o.g * o.g);
}

Vec velocity(Vec x, bool three_d) {
  const Offset o = offsets(x, three_d);
  const double r = std::sqrt(o.a * o.a + o.b * o.b + o.g * o.g);
  return Vec{-o.a / r, -o.b / r, -o.g / r};
}

double source(Vec x, bool three_d) {
  const Offset o = offsets(x, three_d);
  if (o.active == 1) return 0.0;
  const double r = std::sqrt(o.a * o.a + o.b * o.b + o.g * o.g);
  return (1.0 - o.active) / r;
}

}  // namespace

namespace exact2d {
double matrix_pressure(Vec x) { return pressure(x, false); }
Vec matrix_velocity(Vec x) { return velocity(x, false); }
double matrix_source(Vec x) { return source(x, false); }
}  // namespace exact2d

namespace exact3d {
double matrix_pressure(Vec x) { return pressure(x, true); }
Vec matrix_velocity(Vec x) { return velocity(x, true); }
double matrix_source(Vec x) { return source(x, true); }
}  // namespace exact3d

ProblemData make_validation_data(const MDGrid& grid) {
  ProblemData data = ProblemData::uniform(grid, 1.0, 1.0);
  const auto& matrix = grid.subdomains[0].mesh;
  const auto& rule = simplex_rule(2, 4);
  for (int c = 0; c < matrix.num_cells(); ++c) {
    double mean = 0.0;
    for (int q = 0; q < rule.size(); ++q)
      mean += rule.weights[q] *
              exact2d::matrix_source(matrix.cell_point(c, rule.point(q)));
    data.subdomain[0].f_cell[c] = mean;
  }
  data.subdomain[0].dirichlet = exact2d::matrix_pressure;
  data.subdomain[1].f_cell.assign(grid.subdomains[1].mesh.num_cells(),
                                  exact2d::fracture_source);
  return data;
}

TrueErrors validation_errors(const MDGrid& grid, const ProblemData& data,
                             const DiscreteSolution& sol,
                             const ReconstructedPressure& rec,
                             int quad_degree) {
  double p_sq = 0.0, u_sq = 0.0;

  for (size_t s = 0; s < grid.subdomains.size(); ++s) {
    const auto& mesh = grid.subdomains[s].mesh;
    if (mesh.dim == 0) continue;
    const auto& rule = simplex_rule(mesh.dim, quad_degree);
    const bool is_matrix = mesh.dim == grid.ambient_dim;
    for (int c = 0; c < mesh.num_cells(); ++c) {
      const DiagTensor& K = data.subdomain[s].K[c];
      double cp = 0.0, cu = 0.0;
      for (int q = 0; q < rule.size(); ++q) {
        const Vec x = mesh.cell_point(c, rule.point(q));
        const Vec grad_exact =
            is_matrix ? -1.0 * exact2d::matrix_velocity(x) : Vec{};
        const Vec u_exact = is_matrix ? exact2d::matrix_velocity(x) : Vec{};
        const Vec dp = grad_exact - rec.cell_gradient[s][c];
        const Vec du = u_exact - rt0_value(mesh, sol.face_flux[s], c, x);
        cp += rule.weights[q] *
              dot(dp, K.apply(dp, mesh.dim, mesh.ambient_dim));
        cu += rule.weights[q] *
              dot(du, K.apply_inverse(du, mesh.dim, mesh.ambient_dim));
      }
      p_sq += cp * mesh.cell_volume[c];
      u_sq += cu * mesh.cell_volume[c];
    }
  }

  for (size_t i = 0; i < grid.interfaces.size(); ++i) {
    const auto& itf = grid.interfaces[i];
    const auto& kappa = data.interface_[i].kappa;
    const auto& lower_mesh = grid.subdomains[itf.lower].mesh;
    const auto& higher_mesh = grid.subdomains[itf.higher].mesh;

    std::vector<double> jump_rec(itf.mortar.num_cells(), 0.0);
    for (const auto& o : itf.lower_cells)
      jump_rec[o.mortar_cell] +=
          o.measure / itf.mortar.cell_volume[o.mortar_cell] *
          rec.value(lower_mesh, itf.lower, o.entity,
                    lower_mesh.cell_centroid[o.entity]);
    for (const auto& o : itf.higher_faces) {
      const int c = higher_mesh.face_cells[o.entity][0];
      jump_rec[o.mortar_cell] -=
          o.measure / itf.mortar.cell_volume[o.mortar_cell] *
          rec.value(higher_mesh, itf.higher, c,
                    higher_mesh.face_centroid[o.entity]);
    }
    for (int m = 0; m < itf.mortar.num_cells(); ++m) {
      const double dj = exact2d::interface_jump - jump_rec[m];
      const double dl = exact2d::mortar_flux - sol.mortar[i][m];
      p_sq += kappa[m] * dj * dj * itf.mortar.cell_volume[m];
      u_sq += dl * dl / kappa[m] * itf.mortar.cell_volume[m];
    }
  }

  return {std::sqrt(p_sq), std::sqrt(u_sq)};
}

}  // namespace mdflow
