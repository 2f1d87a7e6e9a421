#ifndef MDFLOW_MDGRID_HPP
#define MDFLOW_MDGRID_HPP

#include <string>
#include <vector>

#include "mdflow/mesh.hpp"

namespace mdflow {

/// One weighted source-target incidence of an overlap partition.
struct Overlap {
  int mortar_cell = -1;
  int entity = -1;      ///< higher-side face index or lower-side cell index
  double measure = 0.0; ///< measure of the geometric intersection
};

/// Which geometric side of the lower-dimensional subdomain the interface
/// couples to. Lower/higher pairs that meet on a single side use Plus.
enum class Side { Plus, Minus };

struct Subdomain {
  int id = -1;
  SimplexMesh mesh;
  /// For faces tagged Internal: index of the owning interface, else -1.
  std::vector<int> face_interface;
};

/// Interface between subdomains one dimension apart, discretized by its own
/// mortar mesh. Fluxes live on the mortar as densities; the overlap lists
/// connect mortar cells to higher-side faces and lower-side cells.
struct MortarInterface {
  int id = -1;
  int lower = -1;   ///< subdomain index, dim d
  int higher = -1;  ///< subdomain index, dim d+1
  Side side = Side::Plus;
  SimplexMesh mortar;                ///< dim d mesh
  std::vector<Overlap> higher_faces; ///< mortar cell <-> higher-side face
  std::vector<Overlap> lower_cells;  ///< mortar cell <-> lower-side cell
};

struct MDGrid {
  int ambient_dim = 2;
  std::vector<Subdomain> subdomains;
  std::vector<MortarInterface> interfaces;

  double domain_diameter() const;

  /// Geometric tolerance used for overlap and consistency checks.
  double tol() const { return 1e-10 * domain_diameter(); }
};

/// Computes the overlap lists of every interface from geometry: the mortar
/// cells, the Internal-tagged higher-side faces and the lower-side cells of
/// an interface must partition the same geometric object (a straight segment
/// for 1-d interfaces, a single point for 0-d ones). Throws if the partition
/// property fails beyond grid.tol().
void compute_overlaps(MDGrid& grid);

/// Consistency check: dimensions differ by one across every interface,
/// overlap measures partition both sides to 1e-12 relative, tagged faces
/// match the interface lists. Throws std::runtime_error on violation.
void check_mdgrid(const MDGrid& grid);

/// Validation geometry: unit square matrix slit along x = 1/2 for
/// 1/4 <= y <= 3/4 (nodes on the open slit are duplicated per side), a 1-d
/// fracture subdomain on the slit segment, and two mortar interfaces (Plus:
/// x > 1/2 side, Minus: x < 1/2 side). The three mesh sizes control the
/// matrix (via its trace spacing: an n x n structured triangulation with
/// n = round(1/h_boundary), n divisible by 4), the mortars and the fracture;
/// cell counts on the half-unit segment are round(0.5/h). Subdomain 0 is the
/// matrix, subdomain 1 the fracture.
MDGrid build_validation_grid(double h_boundary, double h_mortar,
                             double h_fracture);

}  // namespace mdflow

#endif
