// Command-line driver: refinement studies against the built-in validation
// problem, and estimator reports for user-supplied meshes and data.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mdflow/mdmesh_io.hpp"
#include "mdflow/study.hpp"
#include "mdflow/vtk.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitBoundViolation = 4;

std::vector<int> parse_levels(const std::string& arg, int max_level) {
  std::vector<int> levels;
  if (arg == "preset:table1") {
    for (int k = 1; k <= max_level; ++k) levels.push_back(k);
    return levels;
  }
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const int k = std::stoi(item);
    if (k < 1 || k > max_level)
      throw std::invalid_argument("--levels: level out of range 1.." +
                                  std::to_string(max_level));
    levels.push_back(k);
  }
  if (levels.empty()) throw std::invalid_argument("--levels: empty level list");
  return levels;
}

/// Problem data file: whitespace-separated directives, '#' comments.
///   preset exact2d          built-in validation data (overrides the rest)
///   k <subdomain> <value>   permeability
///   kappa <interface> <value>
///   f <subdomain> <value>   P0 source density
///   dirichlet <value>       constant boundary pressure
/// Without a preset, every subdomain needs k and every interface kappa.
mdflow::ProblemData load_problem_data(const mdflow::MDGrid& grid,
                                      const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open data file '" + path + "'");

  mdflow::ProblemData data = mdflow::ProblemData::uniform(grid, 1.0, 1.0);
  std::vector<bool> has_k(grid.subdomains.size(), false);
  std::vector<bool> has_kappa(grid.interfaces.size(), false);

  std::string key;
  while (in >> key) {
    if (key[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (key == "preset") {
      std::string name;
      in >> name;
      if (name != "exact2d")
        throw std::invalid_argument("unknown preset '" + name + "'");
      return mdflow::make_validation_data(grid);
    }
    if (key == "k" || key == "f") {
      int sid;
      double value;
      if (!(in >> sid >> value))
        throw std::invalid_argument("malformed '" + key + "' directive");
      if (sid < 0 || sid >= static_cast<int>(grid.subdomains.size()))
        throw std::invalid_argument("unknown subdomain in data file");
      if (key == "k") {
        data.subdomain[sid].K.assign(grid.subdomains[sid].mesh.num_cells(),
                                     mdflow::DiagTensor::scalar(value));
        has_k[sid] = true;
      } else {
        data.subdomain[sid].f_cell.assign(grid.subdomains[sid].mesh.num_cells(),
                                          value);
      }
    } else if (key == "kappa") {
      int iid;
      double value;
      if (!(in >> iid >> value))
        throw std::invalid_argument("malformed 'kappa' directive");
      if (iid < 0 || iid >= static_cast<int>(grid.interfaces.size()))
        throw std::invalid_argument("unknown interface in data file");
      data.interface_[iid].kappa.assign(grid.interfaces[iid].mortar.num_cells(),
                                        value);
      has_kappa[iid] = true;
    } else if (key == "dirichlet") {
      double value;
      if (!(in >> value))
        throw std::invalid_argument("malformed 'dirichlet' directive");
      for (auto& sd : data.subdomain)
        sd.dirichlet = [value](mdflow::Vec) { return value; };
    } else {
      throw std::invalid_argument("unknown directive '" + key + "'");
    }
  }
  for (size_t s = 0; s < has_k.size(); ++s)
    if (!has_k[s])
      throw std::invalid_argument("data file misses k for subdomain " +
                                  std::to_string(s));
  for (size_t i = 0; i < has_kappa.size(); ++i)
    if (!has_kappa[i])
      throw std::invalid_argument("data file misses kappa for interface " +
                                  std::to_string(i));
  return data;
}

int run_validate(const std::string& method_name, const std::string& levels_arg,
                 const std::string& out_path, const std::string& vtk_dir,
                 int quad_degree) {
  const mdflow::Method method = method_name == "tpfa" ? mdflow::Method::Tpfa
                                                      : mdflow::Method::Rt0p0;
  const auto specs = mdflow::validation_levels();
  std::vector<int> levels;
  try {
    levels = parse_levels(levels_arg, static_cast<int>(specs.size()));
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }

  std::vector<mdflow::StudyRow> rows;
  for (int k : levels) {
    std::string vtk_path;
    if (!vtk_dir.empty())
      vtk_path = vtk_dir + "/" + method_name + "_level" + std::to_string(k) +
                 ".vtk";
    try {
      rows.push_back(mdflow::run_validation_level(method, k, specs[k - 1],
                                                  quad_degree, vtk_path));
    } catch (const std::exception& e) {
      std::cerr << "level " << k << " (" << method_name << "): " << e.what()
                << "\n";
      return kExitNumerical;
    }
    const auto& r = rows.back();
    std::cout << method_name << " level " << k << ": majorant "
              << r.majorant << ", pressure error " << r.pressure_error
              << ", flux error " << r.flux_error << ", I_pu " << r.i_pu
              << "\n";
  }

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open '" << out_path << "' for writing\n";
    return kExitConfig;
  }
  write_study_csv(rows, out);

  for (const auto& r : rows)
    if (!r.bound_holds) {
      std::cerr << "guaranteed bound violated at " << r.method << " level "
                << r.level << ": margins " << r.margin_p << ", " << r.margin_u
                << "\n";
      return kExitBoundViolation;
    }
  return 0;
}

int run_estimate(const std::string& mesh_path, const std::string& data_path,
                 const std::string& out_path, const std::string& vtk_path) {
  mdflow::MDGrid grid;
  mdflow::ProblemData data;
  try {
    grid = mdflow::load_mdgrid(mesh_path);
    data = load_problem_data(grid, data_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }

  try {
    mdflow::LinearSystem sys = mdflow::assemble_tpfa(grid, data);
    mdflow::DiscreteSolution sol = mdflow::solve(grid, data, sys);
    mdflow::ReconstructedPressure rec =
        mdflow::reconstruct_pressure(grid, data, sol);
    mdflow::ErrorReport report = mdflow::assemble_report(grid, data, sol, rec);

    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot open '" << out_path << "' for writing\n";
      return kExitConfig;
    }
    write_report_csv(grid, report, out);
    if (!vtk_path.empty()) mdflow::write_vtk(grid, report, vtk_path);
    std::cout << "majorant " << report.majorant << ", scaled "
              << report.scaled_majorant << " (xi " << report.xi << ")\n";
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed-dimensional Darcy solver with guaranteed error bounds"};
  app.require_subcommand(1);

  std::string method = "rt0", levels = "preset:table1";
  std::string out_path, vtk_dir, mesh_path, data_path, vtk_path;
  int quad_degree = 6;

  auto* validate = app.add_subcommand(
      "validate", "Run the built-in refinement study with known solution");
  validate->add_option("--method", method, "Discretization: tpfa or rt0")
      ->check(CLI::IsMember({"tpfa", "rt0"}));
  validate->add_option("--levels", levels,
                       "Comma-separated levels 1..5 or preset:table1");
  validate->add_option("--out", out_path, "Output CSV path")->required();
  validate->add_option("--vtk-dir", vtk_dir,
                       "Directory for per-level VTK estimator fields");
  validate->add_option("--quad-degree", quad_degree,
                       "Quadrature degree for true errors")
      ->check(CLI::Range(2, 12));

  auto* estimate = app.add_subcommand(
      "estimate", "Estimate errors on a user mesh without a known solution");
  estimate->add_option("--mesh", mesh_path, "MDMesh grid file")->required();
  estimate->add_option("--data", data_path, "Problem data file")->required();
  estimate->add_option("--out", out_path, "Output CSV path")->required();
  estimate->add_option("--vtk", vtk_path, "VTK output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (validate->parsed())
    return run_validate(method, levels, out_path, vtk_dir, quad_degree);
  return run_estimate(mesh_path, data_path, out_path, vtk_path);
}
