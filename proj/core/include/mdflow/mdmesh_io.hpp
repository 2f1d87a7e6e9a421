#ifndef MDFLOW_MDMESH_IO_HPP
#define MDFLOW_MDMESH_IO_HPP

#include <iosfwd>
#include <string>

#include "mdflow/mdgrid.hpp"

namespace mdflow {

/// Read a mixed-dimensional grid from the MDMesh text format (see
/// docs/formats.md). Derived geometry, overlaps, and consistency checks run
/// before returning; malformed input throws std::runtime_error.
MDGrid load_mdgrid(const std::string& path);
MDGrid read_mdmesh(std::istream& in);

/// Write a grid in the MDMesh text format; load_mdgrid round-trips it.
void save_mdgrid(const MDGrid& grid, const std::string& path);
void write_mdmesh(const MDGrid& grid, std::ostream& out);

}  // namespace mdflow

#endif
