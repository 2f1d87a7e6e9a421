#include "mdflow/estimate.hpp"

#include <cmath>

#include "mdflow/projections.hpp"
#include "mdflow/quadrature.hpp"

namespace mdflow {

namespace {
constexpr double kPoincare = 0.31830988618379067;  // 1/pi, convex cells
}

double eta_df_cell(const SimplexMesh& mesh, const DiagTensor& K,
                   const std::vector<double>& face_flux, Vec grad_rec, int c) {
  if (mesh.dim == 0) return 0.0;
  const auto& rule = simplex_rule(mesh.dim, 2);
  double sq = 0.0;
  for (int q = 0; q < rule.size(); ++q) {
    Vec x = mesh.cell_point(c, rule.point(q));
    Vec u = rt0_value(mesh, face_flux, c, x);
    // |K^{-1/2} u + K^{1/2} g|^2 = (u + K g) . K^{-1}(u + K g)
    Vec mis = u + K.apply(grad_rec, mesh.dim, mesh.ambient_dim);
    sq += rule.weights[q] *
          dot(mis, K.apply_inverse(mis, mesh.dim, mesh.ambient_dim));
  }
  return std::sqrt(sq * mesh.cell_volume[c]);
}

double eta_r_cell(const SimplexMesh& mesh, const DiagTensor& K, int c,
                  const std::function<double(Vec)>& residual) {
  if (mesh.dim == 0) return 0.0;
  const auto& rule = simplex_rule(mesh.dim, 4);
  double sq = 0.0;
  for (int q = 0; q < rule.size(); ++q) {
    const double r = residual(mesh.cell_point(c, rule.point(q)));
    sq += rule.weights[q] * r * r;
  }
  const double norm = std::sqrt(sq * mesh.cell_volume[c]);
  return kPoincare * mesh.cell_diameter[c] / std::sqrt(K.min_eig(mesh.dim)) * norm;
}

double eta_r_cell(const SimplexMesh& mesh, const DiagTensor& K, int c,
                  double residual_value) {
  if (mesh.dim == 0) return 0.0;
  const double norm = std::abs(residual_value) * std::sqrt(mesh.cell_volume[c]);
  return kPoincare * mesh.cell_diameter[c] / std::sqrt(K.min_eig(mesh.dim)) * norm;
}

double eta_df_mortar(double kappa, double lambda, double p_lower,
                     double p_higher, double measure) {
  const double rk = std::sqrt(kappa);
  return std::abs(lambda / rk + rk * (p_lower - p_higher)) * std::sqrt(measure);
}

ErrorReport assemble_report(const MDGrid& grid, const ProblemData& data,
                            const DiscreteSolution& sol,
                            const ReconstructedPressure& rec) {
  ErrorReport rep;
  const size_t ns = grid.subdomains.size(), ni = grid.interfaces.size();
  rep.eta_df_sq.resize(ns);
  rep.eta_r_sq.resize(ns);
  rep.eta_df_mortar_sq.resize(ni);
  rep.eps_df_subdomain.assign(ns, 0.0);
  rep.eps_r_subdomain.assign(ns, 0.0);
  rep.eps_subdomain.assign(ns, 0.0);
  rep.eps_interface.assign(ni, 0.0);

  double df_sq = 0.0, r_sq = 0.0, xi_sq = 0.0;

  for (size_t s = 0; s < ns; ++s) {
    const auto& mesh = grid.subdomains[s].mesh;
    const auto& sd = data.subdomain[s];
    auto& df = rep.eta_df_sq[s];
    auto& rr = rep.eta_r_sq[s];
    df.assign(mesh.num_cells(), 0.0);
    rr.assign(mesh.num_cells(), 0.0);

    const std::vector<double> jump =
        mortar_jump(grid, static_cast<int>(s), sol.mortar);

    double eps_df = 0.0, eps_r = 0.0;
    for (int c = 0; c < mesh.num_cells(); ++c) {
      const double e_df = eta_df_cell(mesh, sd.K[c], sol.face_flux[s],
                                      rec.cell_gradient[s][c], c);
      const double divu =
          mesh.dim > 0 ? rt0_divergence(mesh, sol.face_flux[s], c) : 0.0;
      double e_r;
      if (sd.f_fun) {
        const double shift = -divu + jump[c];
        e_r = eta_r_cell(mesh, sd.K[c], c,
                         [&](Vec x) { return sd.f_fun(x) + shift; });
      } else {
        e_r = eta_r_cell(mesh, sd.K[c], c, sd.f_cell[c] - divu + jump[c]);
      }
      df[c] = e_df * e_df;
      rr[c] = e_r * e_r;
      eps_df += df[c] / sd.K[c].max_eig(std::max(mesh.dim, 1));
      eps_r += rr[c];
      df_sq += df[c];
      r_sq += rr[c];
      xi_sq = std::max(xi_sq, sd.K[c].max_eig(std::max(mesh.dim, 1)));
    }
    rep.eps_df_subdomain[s] = std::sqrt(eps_df);
    rep.eps_r_subdomain[s] = std::sqrt(eps_r);
    rep.eps_subdomain[s] = std::sqrt(eps_df + eps_r);
  }

  for (size_t i = 0; i < ni; ++i) {
    const auto& itf = grid.interfaces[i];
    const auto& kappa = data.interface_[i].kappa;
    const auto& mortar = itf.mortar;
    const auto& higher_mesh = grid.subdomains[itf.higher].mesh;
    const auto& lower_mesh = grid.subdomains[itf.lower].mesh;

    // Mortar projections of the reconstructed pressures: P1 cell means on
    // the lower side, P1 face means on the higher-side traces.
    std::vector<double> p_low(mortar.num_cells(), 0.0),
        p_high(mortar.num_cells(), 0.0);
    for (const auto& o : itf.lower_cells)
      p_low[o.mortar_cell] +=
          o.measure / mortar.cell_volume[o.mortar_cell] *
          rec.value(lower_mesh, itf.lower, o.entity,
                    lower_mesh.cell_centroid[o.entity]);
    for (const auto& o : itf.higher_faces) {
      const int c = higher_mesh.face_cells[o.entity][0];
      p_high[o.mortar_cell] +=
          o.measure / mortar.cell_volume[o.mortar_cell] *
          rec.value(higher_mesh, itf.higher, c,
                    higher_mesh.face_centroid[o.entity]);
    }

    auto& em = rep.eta_df_mortar_sq[i];
    em.assign(mortar.num_cells(), 0.0);
    double eps = 0.0;
    for (int m = 0; m < mortar.num_cells(); ++m) {
      const double eta = eta_df_mortar(kappa[m], sol.mortar[i][m], p_low[m],
                                       p_high[m], mortar.cell_volume[m]);
      em[m] = eta * eta;
      eps += em[m] / kappa[m];
      df_sq += em[m];
      xi_sq = std::max(xi_sq, kappa[m]);
    }
    rep.eps_interface[i] = std::sqrt(eps);
  }

  rep.diffusive = std::sqrt(df_sq);
  rep.residual = std::sqrt(r_sq);
  rep.majorant = rep.diffusive + rep.residual;
  rep.xi = std::sqrt(xi_sq);
  rep.scaled_majorant = rep.majorant / rep.xi;
  return rep;
}

Effectivity effectivity(double majorant, double err_p, double err_u,
                        double residual_term) {
  return {majorant / err_p, majorant / err_u,
          3.0 * majorant / (err_p + err_u + residual_term)};
}

BoundCheck verify_guaranteed_bound(const ErrorReport& report, double err_p,
                                   double err_u, double rel_slack) {
  BoundCheck chk{report.majorant / err_p, report.majorant / err_u, false};
  chk.holds = report.majorant >= err_p * (1.0 - rel_slack) &&
              report.majorant >= err_u * (1.0 - rel_slack);
  return chk;
}

}  // namespace mdflow
