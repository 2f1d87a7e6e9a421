#ifndef MDFLOW_PROJECTIONS_HPP
#define MDFLOW_PROJECTIONS_HPP

#include <vector>

#include "mdflow/mdgrid.hpp"

namespace mdflow {

/// Sparse overlap-weighted map between entity-indexed value vectors.
struct ProjectionMap {
  int rows = 0, cols = 0;
  std::vector<int> row_ptr;  ///< size rows+1
  std::vector<int> col;
  std::vector<double> weight;

  std::vector<double> apply(const std::vector<double>& x) const;
  double row_sum(int r) const;
};

/// Average of higher-side face values (densities or traces) onto mortar
/// cells: value(m) = sum_f value(f) * |overlap| / |m|. Columns are indexed by
/// the higher mesh's global face numbers. Rows sum to 1.
ProjectionMap project_trace_to_mortar(const MDGrid& grid,
                                      const MortarInterface& itf);

/// Average of lower-side cell values onto mortar cells:
/// value(m) = sum_c value(c) * |overlap| / |m|. Rows sum to 1.
ProjectionMap project_lower_to_mortar(const MDGrid& grid,
                                      const MortarInterface& itf);

/// Extension of mortar densities onto lower-side cells preserving integrals:
/// value(c) = sum_m value(m) * |overlap| / |c|.
ProjectionMap extend_mortar_to_lower(const MDGrid& grid,
                                     const MortarInterface& itf);

/// Interface-flux jump seen by subdomain `sid` as a cellwise density:
/// jump(c) = sum over interfaces with lower == sid of the extension of that
/// interface's mortar density. `mortar_values[i]` holds interface i's values;
/// vectors for interfaces not touching `sid` may be empty.
std::vector<double> mortar_jump(const MDGrid& grid, int sid,
                                const std::vector<std::vector<double>>& mortar_values);

}  // namespace mdflow

#endif
