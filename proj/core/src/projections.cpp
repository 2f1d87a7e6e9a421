#include "mdflow/projections.hpp"

#include <stdexcept>

namespace mdflow {

std::vector<double> ProjectionMap::apply(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != cols)
    throw std::invalid_argument("ProjectionMap::apply: size mismatch");
  std::vector<double> y(rows, 0.0);
  for (int r = 0; r < rows; ++r)
    for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
      y[r] += weight[k] * x[col[k]];
  return y;
}

double ProjectionMap::row_sum(int r) const {
  double s = 0.0;
  for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) s += weight[k];
  return s;
}

namespace {

ProjectionMap from_overlaps(const std::vector<Overlap>& overlaps, bool to_mortar,
                            int rows, int cols,
                            const std::vector<double>& target_measure) {
  // Bucket by target, weights |overlap| / |target|.
  std::vector<std::vector<std::pair<int, double>>> bucket(rows);
  for (const auto& o : overlaps) {
    int r = to_mortar ? o.mortar_cell : o.entity;
    int c = to_mortar ? o.entity : o.mortar_cell;
    bucket[r].push_back({c, o.measure / target_measure[r]});
  }
  ProjectionMap map;
  map.rows = rows;
  map.cols = cols;
  map.row_ptr.assign(rows + 1, 0);
  for (int r = 0; r < rows; ++r) {
    map.row_ptr[r + 1] = map.row_ptr[r] + static_cast<int>(bucket[r].size());
    for (const auto& [c, w] : bucket[r]) {
      map.col.push_back(c);
      map.weight.push_back(w);
    }
  }
  return map;
}

}  // namespace

ProjectionMap project_trace_to_mortar(const MDGrid& grid,
                                      const MortarInterface& itf) {
  const auto& higher = grid.subdomains[itf.higher].mesh;
  return from_overlaps(itf.higher_faces, true, itf.mortar.num_cells(),
                       higher.num_faces(), itf.mortar.cell_volume);
}

ProjectionMap project_lower_to_mortar(const MDGrid& grid,
                                      const MortarInterface& itf) {
  const auto& lower = grid.subdomains[itf.lower].mesh;
  return from_overlaps(itf.lower_cells, true, itf.mortar.num_cells(),
                       lower.num_cells(), itf.mortar.cell_volume);
}

ProjectionMap extend_mortar_to_lower(const MDGrid& grid,
                                     const MortarInterface& itf) {
  const auto& lower = grid.subdomains[itf.lower].mesh;
  return from_overlaps(itf.lower_cells, false, lower.num_cells(),
                       itf.mortar.num_cells(), lower.cell_volume);
}

std::vector<double> mortar_jump(const MDGrid& grid, int sid,
                                const std::vector<std::vector<double>>& mortar_values) {
  const auto& sub = grid.subdomains[sid];
  std::vector<double> jump(sub.mesh.num_cells(), 0.0);
  for (const auto& itf : grid.interfaces) {
    if (itf.lower != sid) continue;
    const auto& lam = mortar_values[itf.id];
    for (const auto& o : itf.lower_cells)
      jump[o.entity] += o.measure * lam[o.mortar_cell] / sub.mesh.cell_volume[o.entity];
  }
  return jump;
}

}  // namespace mdflow
