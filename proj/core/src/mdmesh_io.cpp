#include "mdflow/mdmesh_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mdflow {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("mdmesh: " + what);
}

std::string next_token(std::istream& in) {
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {  // comment runs to end of line
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    return tok;
  }
  return {};
}

int next_int(std::istream& in) {
  const std::string tok = next_token(in);
  if (tok.empty()) fail("unexpected end of file, expected integer");
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    fail("expected integer, got '" + tok + "'");
  }
}

double next_double(std::istream& in) {
  const std::string tok = next_token(in);
  if (tok.empty()) fail("unexpected end of file, expected number");
  try {
    return std::stod(tok);
  } catch (const std::exception&) {
    fail("expected number, got '" + tok + "'");
  }
}

SimplexMesh read_mesh(std::istream& in, int ambient, int dim) {
  SimplexMesh mesh;
  mesh.ambient_dim = ambient;
  mesh.dim = dim;
  if (next_token(in) != "nodes") fail("expected 'nodes'");
  const int nn = next_int(in);
  mesh.nodes.resize(nn);
  for (auto& p : mesh.nodes) {
    p.x = next_double(in);
    p.y = ambient >= 2 ? next_double(in) : 0.0;
    p.z = ambient >= 3 ? next_double(in) : 0.0;
  }
  if (next_token(in) != "cells") fail("expected 'cells'");
  const int nc = next_int(in);
  mesh.cells.resize(static_cast<size_t>(nc) * (dim + 1));
  for (auto& v : mesh.cells) {
    v = next_int(in);
    if (v < 0 || v >= nn) fail("cell node index out of range");
  }
  mesh.compute_geometry();
  return mesh;
}

/// Faces are addressed by their sorted node tuple.
std::map<std::vector<int>, int> face_index(const SimplexMesh& mesh) {
  std::map<std::vector<int>, int> idx;
  const int nfn = std::max(mesh.dim, 1);
  for (int f = 0; f < mesh.num_faces(); ++f) {
    std::vector<int> key(nfn);
    for (int a = 0; a < nfn; ++a) key[a] = mesh.face_node(f, a);
    std::sort(key.begin(), key.end());
    idx[key] = f;
  }
  return idx;
}

}  // namespace

MDGrid read_mdmesh(std::istream& in) {
  if (next_token(in) != "mdmesh") fail("missing 'mdmesh' header");
  if (next_int(in) != 1) fail("unsupported format version");
  if (next_token(in) != "ambient") fail("expected 'ambient'");

  MDGrid grid;
  grid.ambient_dim = next_int(in);
  if (grid.ambient_dim < 1 || grid.ambient_dim > 3) fail("ambient must be 1..3");

  struct TagRecord {
    int subdomain;
    FaceTag tag;
    int interface_id;
    std::vector<int> key;
  };
  std::vector<TagRecord> tags;

  for (std::string tok = next_token(in); !tok.empty(); tok = next_token(in)) {
    if (tok == "subdomain") {
      const int id = next_int(in);
      if (id != static_cast<int>(grid.subdomains.size()))
        fail("subdomain ids must be consecutive from 0");
      if (next_token(in) != "dim") fail("expected 'dim'");
      const int dim = next_int(in);
      if (dim < 0 || dim > grid.ambient_dim) fail("subdomain dim out of range");
      Subdomain sub;
      sub.id = id;
      sub.mesh = read_mesh(in, grid.ambient_dim, dim);
      sub.face_interface.assign(sub.mesh.num_faces(), -1);
      grid.subdomains.push_back(std::move(sub));
    } else if (tok == "neumann" || tok == "tip" || tok == "internal") {
      if (grid.subdomains.empty()) fail("face tag before any subdomain");
      TagRecord rec;
      rec.subdomain = static_cast<int>(grid.subdomains.size()) - 1;
      rec.tag = tok == "neumann" ? FaceTag::Neumann
                : tok == "tip"   ? FaceTag::Tip
                                 : FaceTag::Internal;
      rec.interface_id = rec.tag == FaceTag::Internal ? next_int(in) : -1;
      const auto& mesh = grid.subdomains.back().mesh;
      rec.key.resize(std::max(mesh.dim, 1));
      for (auto& v : rec.key) v = next_int(in);
      std::sort(rec.key.begin(), rec.key.end());
      tags.push_back(std::move(rec));
    } else if (tok == "interface") {
      MortarInterface itf;
      itf.id = next_int(in);
      if (itf.id != static_cast<int>(grid.interfaces.size()))
        fail("interface ids must be consecutive from 0");
      if (next_token(in) != "lower") fail("expected 'lower'");
      itf.lower = next_int(in);
      if (next_token(in) != "higher") fail("expected 'higher'");
      itf.higher = next_int(in);
      const int ns = static_cast<int>(grid.subdomains.size());
      if (itf.lower < 0 || itf.lower >= ns || itf.higher < 0 || itf.higher >= ns)
        fail("interface references unknown subdomain");
      if (next_token(in) != "side") fail("expected 'side'");
      const std::string side = next_token(in);
      if (side == "plus")
        itf.side = Side::Plus;
      else if (side == "minus")
        itf.side = Side::Minus;
      else
        fail("side must be plus or minus");
      itf.mortar = read_mesh(in, grid.ambient_dim,
                             grid.subdomains[itf.lower].mesh.dim);
      grid.interfaces.push_back(std::move(itf));
    } else {
      fail("unknown section '" + tok + "'");
    }
  }
  if (grid.subdomains.empty()) fail("no subdomains");

  for (auto& sub : grid.subdomains) {
    auto idx = face_index(sub.mesh);
    for (const auto& rec : tags) {
      if (rec.subdomain != sub.id) continue;
      auto it = idx.find(rec.key);
      if (it == idx.end()) fail("tagged face not found in subdomain mesh");
      if (sub.mesh.face_tag[it->second] == FaceTag::Interior)
        fail("tagged face is not a boundary face");
      sub.mesh.face_tag[it->second] = rec.tag;
      if (rec.tag == FaceTag::Internal) {
        if (rec.interface_id < 0 ||
            rec.interface_id >= static_cast<int>(grid.interfaces.size()))
          fail("internal face references unknown interface");
        sub.face_interface[it->second] = rec.interface_id;
      }
    }
  }

  compute_overlaps(grid);
  check_mdgrid(grid);
  return grid;
}

MDGrid load_mdgrid(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  return read_mdmesh(in);
}

void write_mdmesh(const MDGrid& grid, std::ostream& out) {
  out << "mdmesh 1\n";
  out << "ambient " << grid.ambient_dim << "\n";
  out.precision(17);

  auto write_mesh = [&](const SimplexMesh& mesh) {
    out << "nodes " << mesh.num_nodes() << "\n";
    for (const auto& p : mesh.nodes) {
      out << p.x;
      if (grid.ambient_dim >= 2) out << " " << p.y;
      if (grid.ambient_dim >= 3) out << " " << p.z;
      out << "\n";
    }
    out << "cells " << mesh.num_cells() << "\n";
    for (int c = 0; c < mesh.num_cells(); ++c) {
      for (int a = 0; a <= mesh.dim; ++a)
        out << (a ? " " : "") << mesh.cell_node(c, a);
      out << "\n";
    }
  };

  for (const auto& sub : grid.subdomains) {
    out << "subdomain " << sub.id << " dim " << sub.mesh.dim << "\n";
    write_mesh(sub.mesh);
    const int nfn = std::max(sub.mesh.dim, 1);
    for (int f = 0; f < sub.mesh.num_faces(); ++f) {
      const FaceTag tag = sub.mesh.face_tag[f];
      if (tag == FaceTag::Interior || tag == FaceTag::Dirichlet) continue;
      if (tag == FaceTag::Neumann)
        out << "neumann";
      else if (tag == FaceTag::Tip)
        out << "tip";
      else
        out << "internal " << sub.face_interface[f];
      for (int a = 0; a < nfn; ++a) out << " " << sub.mesh.face_node(f, a);
      out << "\n";
    }
  }
  for (const auto& itf : grid.interfaces) {
    out << "interface " << itf.id << " lower " << itf.lower << " higher "
        << itf.higher << " side " << (itf.side == Side::Plus ? "plus" : "minus")
        << "\n";
    write_mesh(itf.mortar);
  }
}

void save_mdgrid(const MDGrid& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("cannot open '" + path + "' for writing");
  write_mdmesh(grid, out);
  if (!out) fail("write failed for '" + path + "'");
}

}  // namespace mdflow
