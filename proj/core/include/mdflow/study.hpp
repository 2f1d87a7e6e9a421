#ifndef MDFLOW_STUDY_HPP
#define MDFLOW_STUDY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mdflow/exact.hpp"

namespace mdflow {

/// Target mesh sizes of one validation refinement level: matrix trace
/// spacing along the fracture, mortar spacing, fracture spacing. The three
/// grids are mutually non-matching by construction.
struct LevelSpec {
  double h_boundary;
  double h_mortar;
  double h_fracture;
};

/// The five standard refinement levels of the validation study.
std::vector<LevelSpec> validation_levels();

/// One solved validation configuration with estimators, true errors, and
/// effectivity indices.
struct StudyRow {
  std::string method;
  int level = 0;
  LevelSpec h{};
  double eps_matrix = 0.0;     ///< combined local error of the matrix
  double eps_fracture = 0.0;   ///< combined local error of the fracture
  double eps_interface = 0.0;  ///< combined local error of both interfaces
  double majorant = 0.0;
  double scaled_majorant = 0.0;
  double xi = 1.0;
  double residual_term = 0.0;  ///< sqrt of the summed squared residual estimators
  double pressure_error = 0.0;
  double flux_error = 0.0;
  double i_p = 0.0, i_u = 0.0, i_pu = 0.0;
  double margin_p = 0.0, margin_u = 0.0;  ///< majorant / true error
  bool bound_holds = false;
  double conservation = 0.0;        ///< max cell defect / max cell |int f|
  double fracture_eta_r_max = 0.0;  ///< largest residual estimator on the fracture
};

/// Build, solve, estimate, and compare one validation level. Writes per-cell
/// estimator fields to vtk_path when non-empty.
StudyRow run_validation_level(Method method, int level, const LevelSpec& spec,
                              int quad_degree = 6,
                              const std::string& vtk_path = "");

/// Study table in the frozen CSV layout (docs/formats.md), 6 significant
/// digits, scientific notation, LF line endings.
void write_study_csv(const std::vector<StudyRow>& rows, std::ostream& out);

/// Report serialization for the estimate command: quantity,value pairs.
void write_report_csv(const MDGrid& grid, const ErrorReport& report,
                      std::ostream& out);

}  // namespace mdflow

#endif
