#include "mdflow/vtk.hpp"

#include <fstream>
#include <stdexcept>
#include <vector>

namespace mdflow {

namespace {

int vtk_cell_type(int dim) {
  switch (dim) {
    case 0: return 1;   // VTK_VERTEX
    case 1: return 3;   // VTK_LINE
    default: return 5;  // VTK_TRIANGLE
  }
}

}  // namespace

void write_vtk(const MDGrid& grid, const ErrorReport& report,
               const std::string& path) {
  if (report.eta_df_sq.size() != grid.subdomains.size() ||
      report.eta_r_sq.size() != grid.subdomains.size() ||
      report.eta_df_mortar_sq.size() != grid.interfaces.size())
    throw std::runtime_error("write_vtk: report does not match grid");
  for (size_t s = 0; s < grid.subdomains.size(); ++s) {
    const size_t n = grid.subdomains[s].mesh.num_cells();
    if (report.eta_df_sq[s].size() != n || report.eta_r_sq[s].size() != n)
      throw std::runtime_error("write_vtk: report does not match grid");
  }
  for (size_t i = 0; i < grid.interfaces.size(); ++i)
    if (report.eta_df_mortar_sq[i].size() !=
        static_cast<size_t>(grid.interfaces[i].mortar.num_cells()))
      throw std::runtime_error("write_vtk: report does not match grid");

  std::vector<const SimplexMesh*> blocks;
  std::vector<int> block_id, block_dim;
  std::vector<const std::vector<double>*> df, rr;
  for (size_t s = 0; s < grid.subdomains.size(); ++s) {
    blocks.push_back(&grid.subdomains[s].mesh);
    block_id.push_back(static_cast<int>(s));
    block_dim.push_back(grid.subdomains[s].mesh.dim);
    df.push_back(&report.eta_df_sq[s]);
    rr.push_back(&report.eta_r_sq[s]);
  }
  for (size_t i = 0; i < grid.interfaces.size(); ++i) {
    blocks.push_back(&grid.interfaces[i].mortar);
    block_id.push_back(static_cast<int>(grid.subdomains.size() + i));
    block_dim.push_back(grid.interfaces[i].mortar.dim);
    df.push_back(&report.eta_df_mortar_sq[i]);
    rr.push_back(nullptr);
  }

  int total_nodes = 0, total_cells = 0, conn = 0;
  for (const auto* m : blocks) {
    total_nodes += m->num_nodes();
    total_cells += m->num_cells();
    conn += m->num_cells() * (m->dim + 2);
  }

  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_vtk: cannot open '" + path + "'");
  out.precision(12);
  out << "# vtk DataFile Version 3.0\n";
  out << "mixed-dimensional error estimators\n";
  out << "ASCII\nDATASET UNSTRUCTURED_GRID\n";

  out << "POINTS " << total_nodes << " double\n";
  for (const auto* m : blocks)
    for (const auto& p : m->nodes)
      out << p.x << " " << p.y << " " << p.z << "\n";

  out << "CELLS " << total_cells << " " << conn << "\n";
  int offset = 0;
  for (const auto* m : blocks) {
    for (int c = 0; c < m->num_cells(); ++c) {
      out << (m->dim + 1);
      for (int a = 0; a <= m->dim; ++a) out << " " << offset + m->cell_node(c, a);
      out << "\n";
    }
    offset += m->num_nodes();
  }

  out << "CELL_TYPES " << total_cells << "\n";
  for (const auto* m : blocks)
    for (int c = 0; c < m->num_cells(); ++c) out << vtk_cell_type(m->dim) << "\n";

  out << "CELL_DATA " << total_cells << "\n";
  out << "SCALARS eta_df_sq double 1\nLOOKUP_TABLE default\n";
  for (size_t b = 0; b < blocks.size(); ++b)
    for (double v : *df[b]) out << v << "\n";
  out << "SCALARS eta_r_sq double 1\nLOOKUP_TABLE default\n";
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (rr[b]) {
      for (double v : *rr[b]) out << v << "\n";
    } else {
      for (int c = 0; c < blocks[b]->num_cells(); ++c) out << 0.0 << "\n";
    }
  }
  out << "SCALARS block_id int 1\nLOOKUP_TABLE default\n";
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int c = 0; c < blocks[b]->num_cells(); ++c) out << block_id[b] << "\n";
  out << "SCALARS block_dim int 1\nLOOKUP_TABLE default\n";
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int c = 0; c < blocks[b]->num_cells(); ++c) out << block_dim[b] << "\n";

  if (!out) throw std::runtime_error("write_vtk: write failed for '" + path + "'");
}

}  // namespace mdflow
