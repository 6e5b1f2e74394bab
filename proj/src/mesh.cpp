#include "wgs/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wgs {

namespace {

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c) {
  return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (c.x() - a.x()) * (b.y() - a.y()));
}

}  // namespace

int Mesh::num_boundary_edges() const {
  int count = 0;
  for (const auto& e : edges)
    if (e.boundary) ++count;
  return count;
}

Vec2 Mesh::outward_normal(int tri, int local_edge) const {
  if (tri < 0 || tri >= num_triangles() || local_edge < 0 || local_edge > 2)
    throw std::out_of_range("outward_normal: index out of range");
  const int e = tri_edges[tri][local_edge];
  return static_cast<double>(tri_edge_sign[tri][local_edge]) * edge_normal[e];
}

Mesh from_triangles(std::vector<Vec2> vertices, std::vector<std::array<int, 3>> triangles) {
  Mesh mesh;
  mesh.vertices = std::move(vertices);
  mesh.triangles = std::move(triangles);

  const int nt = mesh.num_triangles();
  std::map<std::pair<int, int>, int> edge_index;
  std::vector<int> incidence;

  mesh.tri_edges.resize(nt);
  mesh.tri_edge_sign.resize(nt);
  for (int t = 0; t < nt; ++t) {
    const auto& tv = mesh.triangles[t];
    for (int l = 0; l < 3; ++l) {
      const int va = tv[l];
      const int vb = tv[(l + 1) % 3];
      const auto key = std::minmax(va, vb);
      auto [it, inserted] = edge_index.try_emplace(key, static_cast<int>(mesh.edges.size()));
      if (inserted) {
        mesh.edges.push_back(Edge{key.first, key.second, false});
        incidence.push_back(0);
      }
      mesh.tri_edges[t][l] = it->second;
      mesh.tri_edge_sign[t][l] = (va == key.first) ? 1 : -1;
      ++incidence[it->second];
    }
  }
  for (size_t e = 0; e < mesh.edges.size(); ++e) mesh.edges[e].boundary = (incidence[e] == 1);

  const int ne = mesh.num_edges();
  mesh.edge_length.resize(ne);
  mesh.edge_midpoint.resize(ne);
  mesh.edge_normal.resize(ne);
  for (int e = 0; e < ne; ++e) {
    const Vec2 pa = mesh.vertices[mesh.edges[e].a];
    const Vec2 pb = mesh.vertices[mesh.edges[e].b];
    const Vec2 d = pb - pa;
    mesh.edge_length[e] = d.norm();
    mesh.edge_midpoint[e] = 0.5 * (pa + pb);
    mesh.edge_normal[e] = Vec2(d.y(), -d.x()) / mesh.edge_length[e];
  }

  mesh.tri_area.resize(nt);
  mesh.tri_centroid.resize(nt);
  mesh.tri_diameter.resize(nt);
  mesh.h = 0.0;
  for (int t = 0; t < nt; ++t) {
    const auto& tv = mesh.triangles[t];
    const Vec2 a = mesh.vertices[tv[0]], b = mesh.vertices[tv[1]], c = mesh.vertices[tv[2]];
    mesh.tri_area[t] = signed_area(a, b, c);
    mesh.tri_centroid[t] = (a + b + c) / 3.0;
    double diam = 0.0;
    for (int l = 0; l < 3; ++l) diam = std::max(diam, mesh.edge_length[mesh.tri_edges[t][l]]);
    mesh.tri_diameter[t] = diam;
    mesh.h = std::max(mesh.h, diam);
  }
  return mesh;
}

Mesh build_structured(int n) {
  if (n < 1) throw std::invalid_argument("build_structured: n must be >= 1");

  std::vector<Vec2> vertices;
  vertices.reserve(static_cast<size_t>(n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i)
      vertices.emplace_back(static_cast<double>(i) / n, static_cast<double>(j) / n);

  auto vid = [n](int i, int j) { return j * (n + 1) + i; };

  // each square split by its lower-left to upper-right diagonal
  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(static_cast<size_t>(2) * n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int ll = vid(i, j), lr = vid(i + 1, j), ur = vid(i + 1, j + 1), ul = vid(i, j + 1);
      triangles.push_back({ll, lr, ur});
      triangles.push_back({ll, ur, ul});
    }
  }
  return from_triangles(std::move(vertices), std::move(triangles));
}

Mesh refine(const Mesh& mesh) {
  std::vector<Vec2> vertices = mesh.vertices;
  vertices.reserve(vertices.size() + mesh.edges.size());
  std::vector<int> edge_mid(mesh.edges.size());
  for (int e = 0; e < mesh.num_edges(); ++e) {
    edge_mid[e] = static_cast<int>(vertices.size());
    vertices.push_back(mesh.edge_midpoint[e]);
  }

  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(static_cast<size_t>(4) * mesh.triangles.size());
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tv = mesh.triangles[t];
    const int m01 = edge_mid[mesh.tri_edges[t][0]];
    const int m12 = edge_mid[mesh.tri_edges[t][1]];
    const int m20 = edge_mid[mesh.tri_edges[t][2]];
    triangles.push_back({tv[0], m01, m20});
    triangles.push_back({m01, tv[1], m12});
    triangles.push_back({m20, m12, tv[2]});
    triangles.push_back({m01, m12, m20});
  }
  return from_triangles(std::move(vertices), std::move(triangles));
}

std::vector<std::string> validate(const Mesh& mesh) {
  std::vector<std::string> violations;
  auto report = [&violations](const std::string& msg) { violations.push_back(msg); };

  const int nv = mesh.num_vertices();
  const int ne = mesh.num_edges();
  const int nt = mesh.num_triangles();

  for (int t = 0; t < nt; ++t) {
    const auto& tv = mesh.triangles[t];
    for (int l = 0; l < 3; ++l) {
      if (tv[l] < 0 || tv[l] >= nv) {
        report("triangle " + std::to_string(t) + ": vertex index out of range");
        break;
      }
    }
  }
  for (int e = 0; e < ne; ++e) {
    const auto& ed = mesh.edges[e];
    if (ed.a < 0 || ed.a >= nv || ed.b < 0 || ed.b >= nv)
      report("edge " + std::to_string(e) + ": vertex index out of range");
    else if (ed.a >= ed.b)
      report("edge " + std::to_string(e) + ": endpoints not in global orientation order");
  }
  if (!violations.empty()) return violations;  // index errors make the rest meaningless

  for (int t = 0; t < nt; ++t) {
    const auto& tv = mesh.triangles[t];
    const double area = signed_area(mesh.vertices[tv[0]], mesh.vertices[tv[1]], mesh.vertices[tv[2]]);
    if (!(area > 0.0)) report("triangle " + std::to_string(t) + ": negative area");
  }

  // incidence counts from the triangle->edge map
  std::vector<int> incidence(ne, 0);
  std::vector<std::array<int, 2>> edge_signs(ne, {0, 0});
  for (int t = 0; t < nt; ++t) {
    for (int l = 0; l < 3; ++l) {
      const int e = mesh.tri_edges[t][l];
      if (e < 0 || e >= ne) {
        report("triangle " + std::to_string(t) + ": edge index out of range");
        continue;
      }
      if (incidence[e] < 2) edge_signs[e][incidence[e]] = mesh.tri_edge_sign[t][l];
      ++incidence[e];
      const auto key = std::minmax(mesh.triangles[t][l], mesh.triangles[t][(l + 1) % 3]);
      if (key.first != mesh.edges[e].a || key.second != mesh.edges[e].b)
        report("triangle " + std::to_string(t) + " local edge " + std::to_string(l) +
               ": does not join the endpoints of edge " + std::to_string(e));
    }
  }
  for (int e = 0; e < ne; ++e) {
    const int expected = mesh.edges[e].boundary ? 1 : 2;
    if (incidence[e] != expected)
      report("edge " + std::to_string(e) + ": incidence count " + std::to_string(incidence[e]) +
             ", expected " + std::to_string(expected));
    if (incidence[e] == 2 && edge_signs[e][0] + edge_signs[e][1] != 0)
      report("edge " + std::to_string(e) + ": interior incidence signs not opposite");
  }

  if (nv - ne + nt != 1)
    report("Euler relation violated: V - E + T = " + std::to_string(nv - ne + nt));

  double hmax = 0.0;
  for (int t = 0; t < nt; ++t) {
    for (int l = 0; l < 3; ++l) {
      const auto& tv = mesh.triangles[t];
      hmax = std::max(hmax, (mesh.vertices[tv[(l + 1) % 3]] - mesh.vertices[tv[l]]).norm());
    }
  }
  if (std::abs(mesh.h - hmax) > 1e-14 * std::max(1.0, hmax))
    report("stored h does not equal the max element diameter");

  return violations;
}

void dump_mesh(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("dump_mesh: cannot open " + path);
  out << mesh.num_vertices() << ' ' << mesh.num_edges() << ' ' << mesh.num_triangles() << '\n';
  char line[64];
  for (const auto& v : mesh.vertices) {
    std::snprintf(line, sizeof(line), "%.17g %.17g\n", v.x(), v.y());
    out << line;
  }
  for (const auto& e : mesh.edges) out << e.a << ' ' << e.b << ' ' << (e.boundary ? 1 : 0) << '\n';
  for (const auto& t : mesh.triangles) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

}  // namespace wgs
