#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "grids.hpp"
#include "mdflow/estimate.hpp"

using namespace mdflow;

namespace {

SimplexMesh reference_triangle() {
  SimplexMesh m;
  m.ambient_dim = 2;
  m.dim = 2;
  m.nodes = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  m.cells = {0, 1, 2};
  m.compute_geometry();
  return m;
}

struct Solved {
  MDGrid grid;
  ProblemData data;
  DiscreteSolution sol;
  ReconstructedPressure rec;
  ErrorReport report;
};

/// Solve the coupled strip configuration with a unit channel source.
Solved solve_strip(double coefficient_scale = 1.0) {
  Solved s;
  s.grid = testgrids::strip(4, 3, 2);
  s.data = ProblemData::uniform(s.grid, coefficient_scale, coefficient_scale);
  s.data.subdomain[1].f_cell.assign(s.grid.subdomains[1].mesh.num_cells(),
                                    coefficient_scale);
  LinearSystem sys = assemble_tpfa(s.grid, s.data);
  s.sol = solve(s.grid, s.data, sys);
  s.rec = reconstruct_pressure(s.grid, s.data, s.sol);
  s.report = assemble_report(s.grid, s.data, s.sol, s.rec);
  return s;
}

}  // namespace

TEST_CASE("diffusive estimator matches hand values on the reference triangle") {
  SimplexMesh m = reference_triangle();
  std::vector<double> zero_flux(3, 0.0);

  // Zero flux against unit slope: || K^{1/2} grad ||_{L2}.
  REQUIRE(eta_df_cell(m, DiagTensor::scalar(1.0), zero_flux, {1, 0, 0}, 0) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
  REQUIRE(eta_df_cell(m, DiagTensor::scalar(4.0), zero_flux, {1, 0, 0}, 0) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));

  // A flux field equal to -K grad cancels the estimator.
  const Vec u{-4.0, 0.0, 0.0};
  std::vector<double> flux(3);
  for (int f = 0; f < 3; ++f)
    flux[f] = dot(u, m.face_normal[f]) * m.face_area[f];
  REQUIRE(eta_df_cell(m, DiagTensor::scalar(4.0), flux, {1, 0, 0}, 0) < 1e-13);
}

TEST_CASE("residual estimator carries the Poincare weight") {
  SimplexMesh m = reference_triangle();
  const double expected = 1.0 / std::numbers::pi;  // C_P h / sqrt(k) * ||1||

  REQUIRE(eta_r_cell(m, DiagTensor::scalar(1.0), 0, 1.0) ==
          doctest::Approx(expected).epsilon(1e-13));
  REQUIRE(eta_r_cell(m, DiagTensor::scalar(4.0), 0, 1.0) ==
          doctest::Approx(expected / 2.0).epsilon(1e-13));
  REQUIRE(eta_r_cell(m, DiagTensor::scalar(1.0), 0,
                     [](Vec) { return 1.0; }) ==
          doctest::Approx(expected).epsilon(1e-13));
  // Pointwise and constant variants agree on affine residuals only through
  // the L2 norm; a sign flip leaves the estimator unchanged.
  REQUIRE(eta_r_cell(m, DiagTensor::scalar(1.0), 0, -1.0) ==
          doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("estimators vanish on point cells") {
  SimplexMesh m = make_point_mesh({0.25, 0.5, 0});
  REQUIRE(eta_df_cell(m, DiagTensor::scalar(1.0), {}, {1, 1, 0}, 0) == 0.0);
  REQUIRE(eta_r_cell(m, DiagTensor::scalar(1.0), 0, 3.0) == 0.0);
}

TEST_CASE("interface estimator measures the transmission mismatch") {
  REQUIRE(eta_df_mortar(1.0, 0.0, 1.0, 0.0, 0.25) ==
          doctest::Approx(0.5).epsilon(1e-13));
  REQUIRE(eta_df_mortar(100.0, 0.0, 0.1, 0.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-13));
  // Exact transmission data: lambda = kappa (p_higher - p_lower).
  REQUIRE(eta_df_mortar(1.0, 1.0, -1.0, 0.0, 0.25) == 0.0);
}

TEST_CASE("report aggregates the squared local estimators") {
  Solved s = solve_strip();
  const auto& rep = s.report;
  REQUIRE(rep.eta_df_sq.size() == 2);
  REQUIRE(rep.eta_df_mortar_sq.size() == 1);
  REQUIRE(rep.majorant ==
          doctest::Approx(rep.diffusive + rep.residual).epsilon(1e-14));
  REQUIRE(rep.majorant >= 0.0);

  double df = 0.0, r = 0.0;
  for (const auto& sub : rep.eta_df_sq)
    for (double v : sub) {
      REQUIRE(v >= 0.0);
      df += v;
    }
  for (const auto& itf : rep.eta_df_mortar_sq)
    for (double v : itf) df += v;
  for (const auto& sub : rep.eta_r_sq)
    for (double v : sub) r += v;
  REQUIRE(std::sqrt(df) == doctest::Approx(rep.diffusive).epsilon(1e-12));
  REQUIRE(std::sqrt(r) == doctest::Approx(rep.residual).epsilon(1e-12));

  // Unit coefficients: the permeability scale is one and the scaled majorant
  // coincides with the majorant.
  REQUIRE(rep.xi == doctest::Approx(1.0));
  REQUIRE(rep.scaled_majorant * rep.xi ==
          doctest::Approx(rep.majorant).epsilon(1e-14));
}

TEST_CASE("uniform coefficient rescaling moves the majorant by its square root") {
  Solved base = solve_strip(1.0);
  Solved scaled = solve_strip(4.0);
  REQUIRE(scaled.report.majorant ==
          doctest::Approx(2.0 * base.report.majorant).epsilon(1e-9));
  REQUIRE(scaled.report.xi == doctest::Approx(2.0 * base.report.xi).epsilon(1e-13));
  REQUIRE(scaled.report.scaled_majorant ==
          doctest::Approx(base.report.scaled_majorant).epsilon(1e-9));
}

TEST_CASE("effectivity indices follow their definitions") {
  Effectivity e = effectivity(2.0, 1.0, 1.6, 0.4);
  REQUIRE(e.i_p == doctest::Approx(2.0));
  REQUIRE(e.i_u == doctest::Approx(1.25));
  REQUIRE(e.i_pu == doctest::Approx(6.0 / 3.0));
}

TEST_CASE("bound verification flags majorants below the true error") {
  ErrorReport rep;
  rep.majorant = 1.0;
  BoundCheck ok = verify_guaranteed_bound(rep, 0.5, 0.8);
  REQUIRE(ok.holds);
  REQUIRE(ok.margin_pressure == doctest::Approx(2.0));
  REQUIRE(ok.margin_flux == doctest::Approx(1.25));

  BoundCheck bad = verify_guaranteed_bound(rep, 2.0, 0.5);
  REQUIRE(!bad.holds);

  // The slack tolerates quadrature noise just past the bound.
  BoundCheck close = verify_guaranteed_bound(rep, 1.0 + 5e-7, 0.5);
  REQUIRE(close.holds);
}
