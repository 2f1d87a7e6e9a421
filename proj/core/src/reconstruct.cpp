#include "mdflow/reconstruct.hpp"

namespace mdflow {

namespace {

/// P1 gradient from nodal values: solve the (dim x dim) Gram system of the
/// edge vectors, then map back to ambient coordinates.
Vec p1_gradient(const SimplexMesh& mesh, const std::vector<double>& v, int c) {
  const int d = mesh.dim;
  if (d == 0) return Vec{};
  const Vec x0 = mesh.nodes[mesh.cell_node(c, 0)];
  const double v0 = v[mesh.cell_node(c, 0)];
  Vec e[2];
  double dv[2];
  for (int a = 0; a < d; ++a) {
    e[a] = mesh.nodes[mesh.cell_node(c, a + 1)] - x0;
    dv[a] = v[mesh.cell_node(c, a + 1)] - v0;
  }
  if (d == 1) return (dv[0] / dot(e[0], e[0])) * e[0];
  const double g00 = dot(e[0], e[0]), g01 = dot(e[0], e[1]), g11 = dot(e[1], e[1]);
  const double det = g00 * g11 - g01 * g01;
  const double a0 = (g11 * dv[0] - g01 * dv[1]) / det;
  const double a1 = (g00 * dv[1] - g01 * dv[0]) / det;
  return a0 * e[0] + a1 * e[1];
}

}  // namespace

ReconstructedPressure reconstruct_pressure(const MDGrid& grid,
                                           const ProblemData& data,
                                           const DiscreteSolution& sol) {
  ReconstructedPressure rec;
  rec.node_value.resize(grid.subdomains.size());
  rec.cell_gradient.resize(grid.subdomains.size());

  for (size_t s = 0; s < grid.subdomains.size(); ++s) {
    const auto& mesh = grid.subdomains[s].mesh;
    const auto& sd = data.subdomain[s];
    auto& v = rec.node_value[s];
    v.assign(mesh.num_nodes(), 0.0);
    std::vector<double> weight(mesh.num_nodes(), 0.0);

    for (int c = 0; c < mesh.num_cells(); ++c) {
      // In-cell linear model: p_K at the centroid, slope -K^{-1} u_h.
      Vec slope{};
      if (mesh.dim > 0) {
        Vec u = rt0_value(mesh, sol.face_flux[s], c, mesh.cell_centroid[c]);
        slope = -1.0 * sd.K[c].apply_inverse(u, mesh.dim, mesh.ambient_dim);
      }
      const double w = mesh.cell_volume[c];
      for (int a = 0; a <= mesh.dim; ++a) {
        const int node = mesh.cell_node(c, a);
        const Vec dx = mesh.nodes[node] - mesh.cell_centroid[c];
        v[node] += w * (sol.pressure[s][c] + dot(slope, dx));
        weight[node] += w;
      }
    }
    for (int node = 0; node < mesh.num_nodes(); ++node) v[node] /= weight[node];

    // Boundary data wins on external Dirichlet nodes.
    for (int f = 0; f < mesh.num_faces(); ++f)
      if (mesh.face_tag[f] == FaceTag::Dirichlet)
        for (int a = 0; a < std::max(mesh.dim, 1); ++a) {
          const int node = mesh.face_node(f, a);
          v[node] = sd.dirichlet(mesh.nodes[node]);
        }

    auto& g = rec.cell_gradient[s];
    g.resize(mesh.num_cells());
    for (int c = 0; c < mesh.num_cells(); ++c) g[c] = p1_gradient(mesh, v, c);
  }
  return rec;
}

}  // namespace mdflow
