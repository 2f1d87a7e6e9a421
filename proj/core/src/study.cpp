#include "mdflow/study.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "mdflow/vtk.hpp"

namespace mdflow {

std::vector<LevelSpec> validation_levels() {
  return {{0.05, 0.1, 0.07143},
          {0.025, 0.05, 0.03571},
          {0.0125, 0.025, 0.01852},
          {0.00625, 0.0125, 0.00926},
          {0.00313, 0.00625, 0.00467}};
}

StudyRow run_validation_level(Method method, int level, const LevelSpec& spec,
                              int quad_degree, const std::string& vtk_path) {
  MDGrid grid = build_validation_grid(spec.h_boundary, spec.h_mortar,
                                      spec.h_fracture);
  ProblemData data = make_validation_data(grid);
  LinearSystem sys = method == Method::Tpfa ? assemble_tpfa(grid, data)
                                            : assemble_rt0p0(grid, data);
  DiscreteSolution sol = solve(grid, data, sys);
  ReconstructedPressure rec = reconstruct_pressure(grid, data, sol);
  ErrorReport report = assemble_report(grid, data, sol, rec);
  TrueErrors errors = validation_errors(grid, data, sol, rec, quad_degree);

  StudyRow row;
  row.method = method == Method::Tpfa ? "tpfa" : "rt0";
  row.level = level;
  row.h = spec;
  row.eps_matrix = report.eps_subdomain[0];
  row.eps_fracture = report.eps_subdomain[1];
  double itf_sq = 0.0;
  for (double e : report.eps_interface) itf_sq += e * e;
  row.eps_interface = std::sqrt(itf_sq);
  row.majorant = report.majorant;
  row.scaled_majorant = report.scaled_majorant;
  row.xi = report.xi;
  row.residual_term = report.residual;
  row.pressure_error = errors.pressure;
  row.flux_error = errors.flux;

  const Effectivity eff = effectivity(report.majorant, errors.pressure,
                                      errors.flux, report.residual);
  row.i_p = eff.i_p;
  row.i_u = eff.i_u;
  row.i_pu = eff.i_pu;

  const BoundCheck chk =
      verify_guaranteed_bound(report, errors.pressure, errors.flux);
  row.margin_p = chk.margin_pressure;
  row.margin_u = chk.margin_flux;
  row.bound_holds = chk.holds;

  const auto defects = check_local_conservation(grid, data, sol);
  double max_defect = 0.0, max_source = 0.0;
  for (size_t s = 0; s < grid.subdomains.size(); ++s) {
    const auto& mesh = grid.subdomains[s].mesh;
    for (int c = 0; c < mesh.num_cells(); ++c) {
      max_defect = std::max(max_defect, std::abs(defects[s][c]));
      max_source = std::max(
          max_source, std::abs(source_integral(mesh, data.subdomain[s], c)));
    }
  }
  row.conservation = max_defect / max_source;

  for (double sq : report.eta_r_sq[1])
    row.fracture_eta_r_max = std::max(row.fracture_eta_r_max, std::sqrt(sq));

  if (!vtk_path.empty()) write_vtk(grid, report, vtk_path);
  return row;
}

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5e", v);
  return buf;
}

}  // namespace

void write_study_csv(const std::vector<StudyRow>& rows, std::ostream& out) {
  out << "method,level,h_boundary,h_mortar,h_fracture,eps_Omega2,eps_Omega1,"
         "eps_Gamma12,majorant,pressure_error,flux_error,I_p,I_u,I_pu\n";
  for (const auto& r : rows) {
    out << r.method << "," << r.level << "," << sci(r.h.h_boundary) << ","
        << sci(r.h.h_mortar) << "," << sci(r.h.h_fracture) << ","
        << sci(r.eps_matrix) << "," << sci(r.eps_fracture) << ","
        << sci(r.eps_interface) << "," << sci(r.majorant) << ","
        << sci(r.pressure_error) << "," << sci(r.flux_error) << ","
        << sci(r.i_p) << "," << sci(r.i_u) << "," << sci(r.i_pu) << "\n";
  }
}

void write_report_csv(const MDGrid& grid, const ErrorReport& report,
                      std::ostream& out) {
  out << "quantity,value\n";
  out << "majorant," << sci(report.majorant) << "\n";
  out << "scaled_majorant," << sci(report.scaled_majorant) << "\n";
  out << "xi," << sci(report.xi) << "\n";
  out << "diffusive," << sci(report.diffusive) << "\n";
  out << "residual," << sci(report.residual) << "\n";
  for (size_t s = 0; s < grid.subdomains.size(); ++s) {
    out << "eps_subdomain_" << s << "," << sci(report.eps_subdomain[s]) << "\n";
    out << "eps_df_subdomain_" << s << "," << sci(report.eps_df_subdomain[s])
        << "\n";
    out << "eps_r_subdomain_" << s << "," << sci(report.eps_r_subdomain[s])
        << "\n";
  }
  for (size_t i = 0; i < grid.interfaces.size(); ++i)
    out << "eps_interface_" << i << "," << sci(report.eps_interface[i]) << "\n";
}

}  // namespace mdflow
