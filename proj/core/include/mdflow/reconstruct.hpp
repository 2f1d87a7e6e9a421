#ifndef MDFLOW_RECONSTRUCT_HPP
#define MDFLOW_RECONSTRUCT_HPP

#include <vector>

#include "mdflow/discretize.hpp"
#include "mdflow/mdgrid.hpp"
#include "mdflow/problem.hpp"

namespace mdflow {

/// Continuous piecewise-linear pressure on each subdomain mesh, built from
/// cell-centered values and face fluxes. Conforming within every subdomain;
/// values on duplicated slit nodes stay side-local.
struct ReconstructedPressure {
  std::vector<std::vector<double>> node_value;  ///< per subdomain, per node
  std::vector<std::vector<Vec>> cell_gradient;  ///< per subdomain, per cell

  /// Value of the P1 interpolant inside cell c of subdomain s.
  double value(const SimplexMesh& mesh, int s, int c, Vec x) const {
    return node_value[s][mesh.cell_node(c, 0)] +
           dot(cell_gradient[s][c], x - mesh.nodes[mesh.cell_node(c, 0)]);
  }
};

/// Patch-averaged nodal reconstruction: each cell contributes its linear
/// extrapolation p_K - (K^{-1} u_h(x_K)) . (x_V - x_K), volume weighted.
/// Nodes on external Dirichlet faces are overridden with the boundary data.
ReconstructedPressure reconstruct_pressure(const MDGrid& grid,
                                           const ProblemData& data,
                                           const DiscreteSolution& sol);

}  // namespace mdflow

#endif
