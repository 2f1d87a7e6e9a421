#ifndef MDFLOW_VTK_HPP
#define MDFLOW_VTK_HPP

#include <string>

#include "mdflow/estimate.hpp"

namespace mdflow {

/// Write grid and per-cell squared estimators as a legacy-ASCII VTK
/// unstructured grid. Subdomain cells carry eta_df_sq and eta_r_sq; mortar
/// cells follow with their diffusive estimator and zero residual. The
/// block_id array numbers subdomains first, then interfaces; block_dim
/// holds the entity dimension.
void write_vtk(const MDGrid& grid, const ErrorReport& report,
               const std::string& path);

}  // namespace mdflow

#endif
