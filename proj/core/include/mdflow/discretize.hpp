#ifndef MDFLOW_DISCRETIZE_HPP
#define MDFLOW_DISCRETIZE_HPP

#include <vector>

#include "mdflow/problem.hpp"

namespace mdflow {

enum class Method { Tpfa, Rt0p0 };

/// Sparse linear system in triplet form together with the unknown layout.
/// TPFA unknowns: [cell pressures per subdomain | mortar densities per
/// interface]. RT0-P0 unknowns: [free face fluxes | cell pressures | mortar
/// densities]; Neumann/Tip faces are imposed strongly and interface faces
/// are substituted by their mortar extension, so neither appears as an
/// unknown. The RT0-P0 matrix is symmetric (saddle form).
struct LinearSystem {
  Method method = Method::Tpfa;
  int n = 0;
  std::vector<int> rows, cols;
  std::vector<double> vals;
  std::vector<double> rhs;

  std::vector<int> cell_offset;    ///< per subdomain
  std::vector<int> mortar_offset;  ///< per interface
  std::vector<std::vector<int>> flux_index;  ///< RT0-P0: face -> unknown or -1
};

/// Discrete solution fields. Face fluxes are integrated fluxes signed along
/// the stored face normals and are filled for both methods (TPFA fluxes are
/// recovered from the pressure/mortar solution), so downstream consumers can
/// treat the flux field uniformly through the cellwise RT0 extension.
struct DiscreteSolution {
  Method method = Method::Tpfa;
  std::vector<std::vector<double>> pressure;   ///< per subdomain, per cell
  std::vector<std::vector<double>> face_flux;  ///< per subdomain, per face
  std::vector<std::vector<double>> mortar;     ///< per interface, per cell
};

/// Cell-centered finite volumes with two-point flux transmissibilities
/// (harmonic means of cell-to-face half transmissibilities; interface
/// coupling combines the higher-side half transmissibility and kappa times
/// the overlap measure harmonically, per overlap pair).
LinearSystem assemble_tpfa(const MDGrid& grid, const ProblemData& data);

/// Lowest-order mixed finite elements (face fluxes + cell pressures) coupled
/// to mortar densities through the interface law; permeability-weighted RT0
/// mass matrices are integrated exactly.
LinearSystem assemble_rt0p0(const MDGrid& grid, const ProblemData& data);

/// Direct sparse factorization. Throws std::runtime_error if factorization
/// fails or the relative residual exceeds 1e-10. The returned solution has
/// face fluxes filled for both methods.
DiscreteSolution solve(const MDGrid& grid, const ProblemData& data,
                       const LinearSystem& system);

/// Fills sol.face_flux from the TPFA pressure/mortar fields (transmissibility
/// fluxes; boundary and interface faces from their closure data). No-op for
/// RT0-P0 solutions, whose fluxes are already face unknowns.
void rt0_extend_fluxes(const MDGrid& grid, const ProblemData& data,
                       DiscreteSolution& sol);

/// RT0 field of cell c at point x from signed face fluxes.
Vec rt0_value(const SimplexMesh& mesh, const std::vector<double>& face_flux,
              int c, Vec x);

/// Cellwise-constant divergence of the RT0 field of cell c.
double rt0_divergence(const SimplexMesh& mesh,
                      const std::vector<double>& face_flux, int c);

/// Per-cell conservation defects  sum_f F_f - int_K jump - int_K f  (the
/// discrete mass balance; with pointwise sources the scheme balances their
/// quadrature cell means, so defects are solver-accuracy zeros).
std::vector<std::vector<double>> check_local_conservation(
    const MDGrid& grid, const ProblemData& data, const DiscreteSolution& sol);

}  // namespace mdflow

#endif
