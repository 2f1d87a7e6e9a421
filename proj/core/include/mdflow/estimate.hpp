#ifndef MDFLOW_ESTIMATE_HPP
#define MDFLOW_ESTIMATE_HPP

#include <functional>
#include <vector>

#include "mdflow/reconstruct.hpp"

namespace mdflow {

/// Per-entity error estimators and their aggregates. The majorant is a
/// guaranteed upper bound on both the pressure energy error and the flux
/// error; the eps_* fields decompose it into permeability-weighted local
/// errors per subdomain and interface.
struct ErrorReport {
  std::vector<std::vector<double>> eta_df_sq;         ///< per subdomain, per cell
  std::vector<std::vector<double>> eta_r_sq;          ///< per subdomain, per cell
  std::vector<std::vector<double>> eta_df_mortar_sq;  ///< per interface, per mortar cell

  std::vector<double> eps_df_subdomain;  ///< permeability-weighted diffusive error
  std::vector<double> eps_r_subdomain;   ///< residual error
  std::vector<double> eps_subdomain;     ///< combined subdomain error
  std::vector<double> eps_interface;     ///< kappa-weighted interface error

  double diffusive = 0.0;        ///< sqrt of all squared diffusive estimators
  double residual = 0.0;         ///< sqrt of all squared residual estimators
  double majorant = 0.0;         ///< diffusive + residual
  double xi = 1.0;               ///< permeability scale max_i(beta_i, gamma_i)
  double scaled_majorant = 0.0;  ///< majorant / xi
};

/// Diffusive-flux estimator of cell c: ||K^{-1/2} u_h + K^{1/2} grad_rec||_{L2(K)}.
/// The integrand is quadratic for RT0 fluxes, so degree-2 quadrature is exact.
double eta_df_cell(const SimplexMesh& mesh, const DiagTensor& K,
                   const std::vector<double>& face_flux, Vec grad_rec, int c);

/// Residual estimator of cell c with a pointwise residual function
/// r(x) = f(x) - div u_h + jump: (C_P h_K / sqrt(lambda_min K)) ||r||_{L2(K)}
/// by degree-4 quadrature, C_P = 1/pi on convex cells.
double eta_r_cell(const SimplexMesh& mesh, const DiagTensor& K, int c,
                  const std::function<double(Vec)>& residual);

/// Residual estimator with a constant residual value on the cell.
double eta_r_cell(const SimplexMesh& mesh, const DiagTensor& K, int c,
                  double residual_value);

/// Diffusive-flux estimator of one mortar cell of measure |m|:
/// |kappa^{-1/2} lambda + kappa^{1/2} (p_lower - p_higher)| sqrt(|m|),
/// where p_lower and p_higher are the reconstructed pressure projected onto
/// the mortar cell from below and from above.
double eta_df_mortar(double kappa, double lambda, double p_lower,
                     double p_higher, double measure);

/// Evaluate all estimators for a solved configuration.
ErrorReport assemble_report(const MDGrid& grid, const ProblemData& data,
                            const DiscreteSolution& sol,
                            const ReconstructedPressure& rec);

/// Effectivity indices of the majorant against true errors. The combined
/// index uses E = err_p + err_u + residual_term and is guaranteed in [1, 3].
struct Effectivity {
  double i_p;   ///< majorant / pressure error
  double i_u;   ///< majorant / flux error
  double i_pu;  ///< 3 majorant / combined error
};
Effectivity effectivity(double majorant, double err_p, double err_u,
                        double residual_term);

/// Check the guaranteed-bound property majorant >= max(err_p, err_u) with a
/// relative slack for quadrature error in the true-error evaluation.
struct BoundCheck {
  double margin_pressure;  ///< majorant / err_p
  double margin_flux;      ///< majorant / err_u
  bool holds;
};
BoundCheck verify_guaranteed_bound(const ErrorReport& report, double err_p,
                                   double err_u, double rel_slack = 1e-6);

}  // namespace mdflow

#endif
