// Acceptance harness: runs the full validation study plus targeted checks
// and prints one pass/fail line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "grids.hpp"
#include "mdflow/projections.hpp"
#include "mdflow/quadrature.hpp"
#include "mdflow/study.hpp"

using namespace mdflow;

namespace {

std::string str(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

double inf_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<double> random_vector(size_t n, std::mt19937& gen) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(gen);
  return v;
}

/// Affine patch on a single subdomain: the majorant and both true errors
/// must vanish to solver accuracy. Two-point fluxes need the equilateral
/// mesh (consistency requires centroid connections orthogonal to faces);
/// the mixed scheme is affine-exact on any triangulation.
Outcome affine_patch(Method method) {
  Outcome out;
  MDGrid g = method == Method::Tpfa ? testgrids::rhombus(4)
                                    : testgrids::unit_square(4);
  ProblemData data = ProblemData::uniform(g);
  data.subdomain[0].dirichlet = [](Vec x) { return 2.0 - 3.0 * x.x; };
  const Vec u{3.0, 0.0, 0.0};
  const Vec grad{-3.0, 0.0, 0.0};

  LinearSystem sys = method == Method::Tpfa ? assemble_tpfa(g, data)
                                            : assemble_rt0p0(g, data);
  DiscreteSolution sol = solve(g, data, sys);
  ReconstructedPressure rec = reconstruct_pressure(g, data, sol);
  ErrorReport rep = assemble_report(g, data, sol, rec);

  const auto& mesh = g.subdomains[0].mesh;
  const SimplexRule& rule = simplex_rule(2, 2);
  double err_p_sq = 0.0, err_u_sq = 0.0;
  for (int c = 0; c < mesh.num_cells(); ++c) {
    Vec dg = rec.cell_gradient[0][c] - grad;
    err_p_sq += mesh.cell_volume[c] * dot(dg, dg);
    double cell = 0.0;
    for (int q = 0; q < rule.size(); ++q) {
      Vec x = mesh.cell_point(c, rule.point(q));
      Vec du = rt0_value(mesh, sol.face_flux[0], c, x) - u;
      cell += rule.weights[q] * dot(du, du);
    }
    err_u_sq += mesh.cell_volume[c] * cell;
  }
  const double err_p = std::sqrt(err_p_sq), err_u = std::sqrt(err_u_sq);
  const char* name = method == Method::Tpfa ? "tpfa" : "rt0";
  out.require(rep.majorant <= 1e-10,
              str("%s majorant %.2e exceeds 1e-10", name, rep.majorant));
  out.require(err_p <= 1e-10,
              str("%s pressure error %.2e exceeds 1e-10", name, err_p));
  out.require(err_u <= 1e-10,
              str("%s flux error %.2e exceeds 1e-10", name, err_u));
  return out;
}

void scale_data(ProblemData& data, double c) {
  for (auto& sd : data.subdomain) {
    for (auto& k : sd.K) {
      k.xx *= c;
      k.yy *= c;
      k.zz *= c;
    }
    for (auto& f : sd.f_cell) f *= c;
  }
  for (auto& itf : data.interface_)
    for (auto& k : itf.kappa) k *= c;
}

ErrorReport run_report(const MDGrid& g, const ProblemData& data) {
  LinearSystem sys = assemble_tpfa(g, data);
  DiscreteSolution sol = solve(g, data, sys);
  ReconstructedPressure rec = reconstruct_pressure(g, data, sol);
  return assemble_report(g, data, sol, rec);
}

}  // namespace

int main() {
  const std::vector<LevelSpec> levels = validation_levels();
  std::vector<StudyRow> rows;

  const auto t0 = std::chrono::steady_clock::now();
  for (Method method : {Method::Tpfa, Method::Rt0p0})
    for (int level = 1; level <= 5; ++level) {
      rows.push_back(run_validation_level(method, level, levels[level - 1]));
      const auto& row = rows.back();
      std::fprintf(stderr,
                   "# %s level %d: majorant %.4e, I_pu %.3f, %.1f s total\n",
                   row.method.c_str(), level, row.majorant, row.i_pu,
                   std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count());
    }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const StudyRow* tpfa = rows.data();      // levels 1..5
  const StudyRow* rt0 = rows.data() + 5;   // levels 1..5

  std::vector<std::pair<int, Outcome>> checks;

  {  // 1: the majorant bounds both true errors on every run, within budget.
    Outcome out;
    int held = 0;
    for (const auto& row : rows) held += row.bound_holds;
    out.require(held == 10, str("bound held on %d/10 runs", held));
    out.require(elapsed < 120.0,
                str("study took %.1f s, budget 120 s", elapsed));
    if (out.pass)
      out.detail = str("bound held on 10/10 runs, study took %.1f s", elapsed);
    checks.push_back({1, out});
  }

  {  // 2: effectivity indices at the finest mixed-element level.
    Outcome out;
    const StudyRow& fine = rt0[4];
    out.require(fine.i_p >= 0.95 && fine.i_p <= 1.45,
                str("I_p %.3f outside [0.95, 1.45]", fine.i_p));
    out.require(fine.i_u >= 1.20 && fine.i_u <= 1.80,
                str("I_u %.3f outside [1.20, 1.80]", fine.i_u));
    out.require(fine.i_pu >= 1.70 && fine.i_pu <= 2.30,
                str("I_pu %.3f outside [1.70, 2.30]", fine.i_pu));
    double lo = 1e300, hi = 0.0;
    for (int k = 0; k < 5; ++k) {
      lo = std::min(lo, rt0[k].i_pu);
      hi = std::max(hi, rt0[k].i_pu);
    }
    out.require(hi / lo < 1.15, str("I_pu spread %.3f >= 1.15", hi / lo));
    if (out.pass)
      out.detail = str("I_p %.3f, I_u %.3f, I_pu %.3f, spread %.3f",
                       fine.i_p, fine.i_u, fine.i_pu, hi / lo);
    checks.push_back({2, out});
  }

  {  // 3: the combined index stays inside its guaranteed interval.
    Outcome out;
    double lo = 1e300, hi = 0.0;
    for (const auto& row : rows) {
      lo = std::min(lo, row.i_pu);
      hi = std::max(hi, row.i_pu);
      out.require(row.i_pu >= 1.0 - 1e-6 && row.i_pu <= 3.0 + 1e-6,
                  str("%s level %d: I_pu %.6f outside [1, 3]",
                      row.method.c_str(), row.level, row.i_pu));
    }
    if (out.pass) out.detail = str("I_pu within [%.3f, %.3f]", lo, hi);
    checks.push_back({3, out});
  }

  {  // 4: first-order decay of the mixed-element majorant.
    Outcome out;
    std::string ratios;
    for (int k = 0; k < 4; ++k) {
      const double q = rt0[k].majorant / rt0[k + 1].majorant;
      ratios += str("%s%.2f", k ? ", " : "", q);
      out.require(q >= 1.6 && q <= 2.2,
                  str("majorant ratio %.3f at level %d outside [1.6, 2.2]", q,
                      k + 1));
    }
    if (out.pass) out.detail = "majorant ratios " + ratios;
    checks.push_back({4, out});
  }

  {  // 5: residual estimators stay at the noise floor.
    Outcome out;
    double worst = 0.0;
    for (const auto& row : rows) {
      worst = std::max(worst, row.fracture_eta_r_max);
      out.require(row.fracture_eta_r_max <= 1e-12,
                  str("%s level %d: fracture residual estimator %.2e",
                      row.method.c_str(), row.level, row.fracture_eta_r_max));
    }
    for (const StudyRow* m : {tpfa, rt0}) {
      const double r3 = m[2].residual_term / m[2].majorant;
      const double r4 = m[3].residual_term / m[3].majorant;
      const double r5 = m[4].residual_term / m[4].majorant;
      out.require(r3 < 0.05,
                  str("%s: residual share %.2e at level 3 exceeds 0.05",
                      m[2].method.c_str(), r3));
      out.require(r4 < r3 || r4 < 1e-10,
                  str("%s: residual share grew to %.2e at level 4",
                      m[3].method.c_str(), r4));
      out.require(r5 < r4 || r5 < 1e-10,
                  str("%s: residual share grew to %.2e at level 5",
                      m[4].method.c_str(), r5));
    }
    if (out.pass)
      out.detail = str("max fracture estimator %.1e, residual share %.1e",
                       worst, rows[4].residual_term / rows[4].majorant);
    checks.push_back({5, out});
  }

  {  // 6: discrete mass balance in every cell, both schemes, all levels.
    Outcome out;
    double worst = 0.0;
    for (const auto& row : rows) {
      worst = std::max(worst, row.conservation);
      out.require(row.conservation < 1e-10,
                  str("%s level %d: conservation defect %.2e",
                      row.method.c_str(), row.level, row.conservation));
    }
    if (out.pass) out.detail = str("max relative defect %.1e", worst);
    checks.push_back({6, out});
  }

  {  // 7: exactness on an affine single-subdomain patch.
    Outcome out = affine_patch(Method::Tpfa);
    Outcome rt = affine_patch(Method::Rt0p0);
    out.require(rt.pass, rt.detail);
    if (out.pass) out.detail = "majorant and both errors below 1e-10";
    checks.push_back({7, out});
  }

  {  // 8: mortar transfer identities and conservation, randomized.
    Outcome out;
    MDGrid matching = build_validation_grid(0.25, 0.25, 0.25);
    MDGrid coarse = build_validation_grid(levels[0].h_boundary,
                                          levels[0].h_mortar,
                                          levels[0].h_fracture);
    std::mt19937 gen(12345);
    double worst = 0.0;
    for (const auto& itf : matching.interfaces) {
      ProjectionMap down = project_lower_to_mortar(matching, itf);
      ProjectionMap up = extend_mortar_to_lower(matching, itf);
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> lam = random_vector(down.rows, gen);
        std::vector<double> cell = random_vector(down.cols, gen);
        worst = std::max(worst, inf_diff(down.apply(up.apply(lam)), lam));
        worst = std::max(worst, inf_diff(up.apply(down.apply(cell)), cell));
      }
    }
    out.require(worst <= 1e-12,
                str("matching-grid identity off by %.2e", worst));

    double row_worst = 0.0, cons_worst = 0.0;
    for (const MDGrid* g : {&matching, &coarse}) {
      for (const auto& itf : g->interfaces) {
        ProjectionMap trace = project_trace_to_mortar(*g, itf);
        ProjectionMap down = project_lower_to_mortar(*g, itf);
        ProjectionMap up = extend_mortar_to_lower(*g, itf);
        for (int r = 0; r < trace.rows; ++r)
          row_worst = std::max(row_worst, std::abs(trace.row_sum(r) - 1.0));
        for (int r = 0; r < down.rows; ++r)
          row_worst = std::max(row_worst, std::abs(down.row_sum(r) - 1.0));
        const auto& lower = g->subdomains[itf.lower].mesh;
        for (int trial = 0; trial < 100; ++trial) {
          std::vector<double> lam = random_vector(itf.mortar.num_cells(), gen);
          std::vector<double> ext = up.apply(lam);
          double im = 0.0, ic = 0.0;
          for (int m = 0; m < itf.mortar.num_cells(); ++m)
            im += lam[m] * itf.mortar.cell_volume[m];
          for (int c = 0; c < lower.num_cells(); ++c)
            ic += ext[c] * lower.cell_volume[c];
          cons_worst = std::max(cons_worst, std::abs(im - ic));
        }
      }
    }
    out.require(row_worst <= 1e-12,
                str("projection row sums off by %.2e", row_worst));
    out.require(cons_worst <= 1e-12,
                str("extension integral off by %.2e", cons_worst));
    if (out.pass)
      out.detail = str("identities within %.1e over 100 trials",
                       std::max(worst, std::max(row_worst, cons_worst)));
    checks.push_back({8, out});
  }

  {  // 9: closed-form reference fields: point values and continuity.
    Outcome out;
    auto near = [&](double got, double want, const char* what) {
      out.require(std::abs(got - want) <= 1e-13,
                  str("%s: got %.15f, expected %.15f", what, got, want));
    };
    near(exact2d::matrix_pressure({1.0, 0.5, 0}), 0.5, "pressure at (1, 1/2)");
    near(exact2d::matrix_pressure({0.0, 0.0, 0}), std::sqrt(0.3125),
         "pressure at the origin");
    near(exact2d::matrix_velocity({0.75, 0.5, 0}).x, -1.0,
         "velocity at (3/4, 1/2)");
    near(exact2d::matrix_velocity({0.75, 0.5, 0}).y, 0.0,
         "transverse velocity at (3/4, 1/2)");
    near(exact2d::matrix_source({0.75, 0.5, 0}), 0.0, "source at (3/4, 1/2)");
    const double rc = std::sqrt(0.25 * 0.25 + 0.15 * 0.15);
    near(exact2d::matrix_source({0.75, 0.9, 0}), -1.0 / rc,
         "source at (3/4, 9/10)");
    near(exact3d::matrix_pressure({1.0, 0.5, 0.5}), 0.5,
         "3-d pressure at (1, 1/2, 1/2)");
    near(exact3d::matrix_pressure({0.0, 0.0, 0.0}), std::sqrt(0.375),
         "3-d pressure at the origin");
    near(exact3d::matrix_velocity({0.75, 0.5, 0.5}).x, -1.0,
         "3-d velocity at (3/4, 1/2, 1/2)");
    near(exact3d::matrix_source({0.75, 0.5, 0.5}), 0.0,
         "3-d source at (3/4, 1/2, 1/2)");

    const double delta = 1e-8;
    double jump2 = 0.0, jump3 = 0.0;
    for (double b : {0.25, 0.75}) {
      for (int i = 0; i < 100; ++i) {
        const double x =
            i < 50 ? 0.01 + 0.44 * i / 49.0 : 0.55 + 0.44 * (i - 50) / 49.0;
        jump2 = std::max(jump2,
                         std::abs(exact2d::matrix_pressure({x, b - delta, 0}) -
                                  exact2d::matrix_pressure({x, b + delta, 0})));
        jump3 = std::max(
            jump3, std::abs(exact3d::matrix_pressure({x, b - delta, 0.5}) -
                            exact3d::matrix_pressure({x, b + delta, 0.5})));
        jump3 = std::max(
            jump3, std::abs(exact3d::matrix_pressure({x, 0.5, b - delta}) -
                            exact3d::matrix_pressure({x, 0.5, b + delta})));
      }
    }
    out.require(jump2 <= 1e-12,
                str("plane pressure discontinuity %.2e", jump2));
    out.require(jump3 <= 1e-12,
                str("3-d pressure discontinuity %.2e", jump3));
    if (out.pass)
      out.detail = str("point values exact, continuity within %.1e",
                       std::max(jump2, jump3));
    checks.push_back({9, out});
  }

  {  // 10: scaled majorant identity and uniform-rescaling covariance.
    Outcome out;
    for (const auto& row : rows)
      out.require(std::abs(row.scaled_majorant * row.xi - row.majorant) <=
                      1e-12 * row.majorant,
                  str("%s level %d: scaled majorant identity off",
                      row.method.c_str(), row.level));

    MDGrid g = build_validation_grid(levels[0].h_boundary,
                                     levels[0].h_mortar,
                                     levels[0].h_fracture);
    ProblemData base = make_validation_data(g);
    ProblemData scaled = base;
    scale_data(scaled, 4.0);
    ErrorReport ra = run_report(g, base);
    ErrorReport rb = run_report(g, scaled);
    out.require(std::abs(rb.majorant - 2.0 * ra.majorant) <=
                    1e-9 * ra.majorant,
                str("majorant scaled by %.12f, expected 2",
                    rb.majorant / ra.majorant));
    out.require(std::abs(rb.xi - 2.0 * ra.xi) <= 1e-12 * ra.xi,
                str("permeability scale moved to %.12f, expected 2",
                    rb.xi / ra.xi));
    out.require(std::abs(rb.scaled_majorant - ra.scaled_majorant) <=
                    1e-9 * ra.scaled_majorant,
                str("scaled majorant drifted by %.2e",
                    std::abs(rb.scaled_majorant - ra.scaled_majorant)));
    if (out.pass)
      out.detail = "identity exact, rescaling moves the majorant as sqrt(c)";
    checks.push_back({10, out});
  }

  int failures = 0;
  for (const auto& [id, out] : checks) {
    failures += !out.pass;
    std::printf("criterion %d: %s - %s\n", id, out.pass ? "PASS" : "FAIL",
                out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(checks.size()) - failures,
              checks.size());
  return failures == 0 ? 0 : 1;
}
