#ifndef MDFLOW_PROBLEM_HPP
#define MDFLOW_PROBLEM_HPP

#include <functional>
#include <vector>

#include "mdflow/mdgrid.hpp"

namespace mdflow {

/// Coefficients and data of one subdomain. Permeability is cellwise constant
/// (scalar or diagonal tensor, tangential scalar for lower-dimensional
/// cells). The source is either cellwise constant (`f_cell`) or pointwise
/// (`f_fun`, integrated with degree-4 quadrature); `f_fun` wins when set.
struct SubdomainData {
  std::vector<DiagTensor> K;              ///< per cell
  std::vector<double> f_cell;             ///< per cell, used when !f_fun
  std::function<double(Vec)> f_fun;       ///< pointwise source density
  std::function<double(Vec)> dirichlet;   ///< boundary pressure datum
  std::function<double(Vec)> neumann;     ///< outward boundary flux density
};

/// Normal permeability of one interface, per mortar cell.
struct InterfaceData {
  std::vector<double> kappa;
};

struct ProblemData {
  std::vector<SubdomainData> subdomain;
  std::vector<InterfaceData> interface_;

  /// Uniform unit-coefficient data with zero sources and homogeneous
  /// Dirichlet boundaries; a convenient starting point for callers.
  static ProblemData uniform(const MDGrid& grid, double k = 1.0,
                             double kappa = 1.0);
};

/// Integral of the source over cell c (centroid rule for cellwise-constant
/// data, degree-4 quadrature for pointwise data).
double source_integral(const SimplexMesh& mesh, const SubdomainData& data, int c);

}  // namespace mdflow

#endif
