#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <stdexcept>

#include "mdflow/discretize.hpp"

namespace mdflow {

DiscreteSolution solve(const MDGrid& grid, const ProblemData& data,
                       const LinearSystem& sys) {
  using Triplet = Eigen::Triplet<double>;
  std::vector<Triplet> trip;
  trip.reserve(sys.vals.size());
  for (size_t k = 0; k < sys.vals.size(); ++k)
    trip.emplace_back(sys.rows[k], sys.cols[k], sys.vals[k]);

  Eigen::SparseMatrix<double> A(sys.n, sys.n);
  A.setFromTriplets(trip.begin(), trip.end());
  A.makeCompressed();
  Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(sys.rhs.data(), sys.n);

  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
  lu.analyzePattern(A);
  lu.factorize(A);
  if (lu.info() != Eigen::Success)
    throw std::runtime_error("solve: sparse factorization failed");
  Eigen::VectorXd x = lu.solve(rhs);

  const double rhs_norm = rhs.norm();
  const double rel = (A * x - rhs).norm() / (rhs_norm > 0.0 ? rhs_norm : 1.0);
  if (!(rel < 1e-10))
    throw std::runtime_error("solve: residual too large, relative norm " +
                             std::to_string(rel));

  DiscreteSolution sol;
  sol.method = sys.method;
  for (size_t s = 0; s < grid.subdomains.size(); ++s) {
    const int nc = grid.subdomains[s].mesh.num_cells();
    sol.pressure.emplace_back(x.data() + sys.cell_offset[s],
                              x.data() + sys.cell_offset[s] + nc);
  }
  for (size_t i = 0; i < grid.interfaces.size(); ++i) {
    const int nm = grid.interfaces[i].mortar.num_cells();
    sol.mortar.emplace_back(x.data() + sys.mortar_offset[i],
                            x.data() + sys.mortar_offset[i] + nm);
  }

  if (sys.method == Method::Rt0p0) {
    sol.face_flux.resize(grid.subdomains.size());
    for (size_t s = 0; s < grid.subdomains.size(); ++s) {
      const auto& mesh = grid.subdomains[s].mesh;
      auto& flux = sol.face_flux[s];
      flux.assign(mesh.num_faces(), 0.0);
      for (int f = 0; f < mesh.num_faces(); ++f) {
        switch (mesh.face_tag[f]) {
          case FaceTag::Interior:
          case FaceTag::Dirichlet:
            flux[f] = x[sys.flux_index[s][f]];
            break;
          case FaceTag::Neumann:
            flux[f] = mesh.face_area[f] *
                      data.subdomain[s].neumann(mesh.face_centroid[f]);
            break;
          case FaceTag::Tip:
          case FaceTag::Internal:
            break;  // tips carry no flux, interface faces filled below
        }
      }
    }
    for (size_t i = 0; i < grid.interfaces.size(); ++i) {
      const auto& itf = grid.interfaces[i];
      for (const auto& o : itf.higher_faces)
        sol.face_flux[itf.higher][o.entity] +=
            o.measure * sol.mortar[i][o.mortar_cell];
    }
  } else {
    rt0_extend_fluxes(grid, data, sol);
  }
  return sol;
}

}  // namespace mdflow
