#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "grids.hpp"
#include "mdflow/mdgrid.hpp"

using namespace mdflow;

namespace {

int count_tag(const SimplexMesh& m, FaceTag tag) {
  int n = 0;
  for (FaceTag t : m.face_tag) n += (t == tag);
  return n;
}

/// Sum of overlap measures per mortar cell.
std::vector<double> mortar_cover(const MortarInterface& itf,
                                 const std::vector<Overlap>& side) {
  std::vector<double> s(itf.mortar.num_cells(), 0.0);
  for (const auto& o : side) s[o.mortar_cell] += o.measure;
  return s;
}

}  // namespace

TEST_CASE("validation grid entity counts at the coarsest level") {
  MDGrid g = build_validation_grid(0.05, 0.1, 1.0 / 14);
  REQUIRE(g.subdomains.size() == 2);
  REQUIRE(g.interfaces.size() == 2);

  const auto& matrix = g.subdomains[0].mesh;
  const auto& fracture = g.subdomains[1].mesh;
  REQUIRE(matrix.dim == 2);
  REQUIRE(matrix.num_cells() == 800);
  // 21 x 21 structured nodes plus 9 duplicated slit nodes.
  REQUIRE(matrix.num_nodes() == 441 + 9);
  REQUIRE(count_tag(matrix, FaceTag::Internal) == 20);

  REQUIRE(fracture.dim == 1);
  REQUIRE(fracture.num_cells() == 7);
  REQUIRE(count_tag(fracture, FaceTag::Tip) == 2);

  for (const auto& itf : g.interfaces) {
    REQUIRE(itf.lower == 1);
    REQUIRE(itf.higher == 0);
    REQUIRE(itf.mortar.num_cells() == 5);
  }
  REQUIRE(g.subdomains[0].id == 0);
  REQUIRE(g.domain_diameter() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("slit nodes are duplicated per side") {
  MDGrid g = build_validation_grid(0.05, 0.1, 1.0 / 14);
  const auto& m = g.subdomains[0].mesh;
  // Nodes strictly inside the slit appear twice; its endpoints once.
  int on_slit = 0;
  for (const auto& p : m.nodes)
    if (std::abs(p.x - 0.5) < 1e-12 && p.y > 0.25 - 1e-12 &&
        p.y < 0.75 + 1e-12)
      ++on_slit;
  // 11 geometric positions, 9 interior ones duplicated.
  REQUIRE(on_slit == 11 + 9);
}

TEST_CASE("interface overlaps partition mortar, trace and fracture") {
  MDGrid g = build_validation_grid(0.05, 0.1, 1.0 / 14);
  for (const auto& itf : g.interfaces) {
    double trace = 0.0, lower = 0.0;
    for (const auto& o : itf.higher_faces) trace += o.measure;
    for (const auto& o : itf.lower_cells) lower += o.measure;
    REQUIRE(trace == doctest::Approx(0.5).epsilon(1e-12));
    REQUIRE(lower == doctest::Approx(0.5).epsilon(1e-12));
    auto cover_f = mortar_cover(itf, itf.higher_faces);
    auto cover_c = mortar_cover(itf, itf.lower_cells);
    for (int m = 0; m < itf.mortar.num_cells(); ++m) {
      REQUIRE(cover_f[m] == doctest::Approx(itf.mortar.cell_volume[m]));
      REQUIRE(cover_c[m] == doctest::Approx(itf.mortar.cell_volume[m]));
    }
  }
}

TEST_CASE("matching grids produce bijective overlaps") {
  MDGrid g = build_validation_grid(0.25, 0.25, 0.25);
  REQUIRE(g.subdomains[0].mesh.num_cells() == 32);
  REQUIRE(g.subdomains[1].mesh.num_cells() == 2);
  for (const auto& itf : g.interfaces) {
    REQUIRE(itf.mortar.num_cells() == 2);
    REQUIRE(itf.higher_faces.size() == 2);
    REQUIRE(itf.lower_cells.size() == 2);
    for (const auto& o : itf.lower_cells)
      REQUIRE(o.measure ==
              doctest::Approx(itf.mortar.cell_volume[o.mortar_cell]));
  }
}

TEST_CASE("trace spacing must place an even cell count on the half side") {
  REQUIRE_THROWS_AS(build_validation_grid(1.0 / 6, 0.25, 0.25),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(build_validation_grid(2.0, 0.25, 0.25),
                    std::invalid_argument);
}

TEST_CASE("consistency check rejects broken grids") {
  SUBCASE("shuffled subdomain ids") {
    MDGrid g = testgrids::strip(2, 2, 2);
    g.subdomains[0].id = 7;
    REQUIRE_THROWS_AS(check_mdgrid(g), std::runtime_error);
  }
  SUBCASE("internal tag without interface back-reference") {
    MDGrid g = testgrids::strip(2, 2, 2);
    for (int f = 0; f < g.subdomains[0].mesh.num_faces(); ++f)
      if (g.subdomains[0].mesh.face_tag[f] == FaceTag::Internal) {
        g.subdomains[0].mesh.face_tag[f] = FaceTag::Dirichlet;
        break;  // face_interface still points at the interface
      }
    REQUIRE_THROWS_AS(check_mdgrid(g), std::runtime_error);
  }
  SUBCASE("tip tag on a top-dimensional subdomain") {
    MDGrid g = testgrids::unit_square(2);
    for (int f = 0; f < g.subdomains[0].mesh.num_faces(); ++f)
      if (g.subdomains[0].mesh.face_cells[f][1] < 0) {
        g.subdomains[0].mesh.face_tag[f] = FaceTag::Tip;
        break;
      }
    REQUIRE_THROWS_AS(check_mdgrid(g), std::runtime_error);
  }
  SUBCASE("mortar not covering the coupled faces") {
    REQUIRE_THROWS_AS(
        [] {
          MDGrid g = testgrids::strip(4, 3, 2);
          g.interfaces[0].mortar = make_segment_mesh({0, 0, 0}, {0.9, 0, 0}, 2);
          compute_overlaps(g);
          check_mdgrid(g);
        }(),
        std::runtime_error);
  }
}

TEST_CASE("point interfaces couple single entities with counting measure") {
  MDGrid g;
  g.ambient_dim = 2;
  Subdomain seg;
  seg.id = 0;
  seg.mesh = make_segment_mesh({0, 0, 0}, {0.5, 0, 0}, 1);
  // Right endpoint faces the point interface.
  for (int f = 0; f < seg.mesh.num_faces(); ++f)
    if (std::abs(seg.mesh.face_centroid[f].x - 0.5) < 1e-12)
      seg.mesh.face_tag[f] = FaceTag::Internal;
  seg.face_interface.assign(seg.mesh.num_faces(), -1);
  for (int f = 0; f < seg.mesh.num_faces(); ++f)
    if (seg.mesh.face_tag[f] == FaceTag::Internal) seg.face_interface[f] = 0;
  g.subdomains.push_back(std::move(seg));

  Subdomain point;
  point.id = 1;
  point.mesh = make_point_mesh({0.5, 0, 0});
  point.face_interface.assign(0, -1);
  g.subdomains.push_back(std::move(point));

  MortarInterface itf;
  itf.id = 0;
  itf.lower = 1;
  itf.higher = 0;
  itf.mortar = make_point_mesh({0.5, 0, 0});
  g.interfaces.push_back(std::move(itf));

  compute_overlaps(g);
  check_mdgrid(g);
  REQUIRE(g.interfaces[0].higher_faces.size() == 1);
  REQUIRE(g.interfaces[0].lower_cells.size() == 1);
  REQUIRE(g.interfaces[0].higher_faces[0].measure == doctest::Approx(1.0));

  // Two lower cells cannot hang on one point interface.
  MDGrid bad = g;
  bad.subdomains[1].mesh = make_segment_mesh({0.5, 0, 0}, {0.5, 0.5, 0}, 2);
  bad.subdomains[1].face_interface.assign(
      bad.subdomains[1].mesh.num_faces(), -1);
  REQUIRE_THROWS_AS(compute_overlaps(bad), std::runtime_error);
}
