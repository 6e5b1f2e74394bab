#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "wgs/mesh.hpp"

using namespace wgs;

TEST_SUITE("mesh") {

TEST_CASE("structured counts and Euler relation") {
  for (int n : {1, 3, 10}) {
    const Mesh mesh = build_structured(n);
    CHECK(mesh.num_vertices() == (n + 1) * (n + 1));
    CHECK(mesh.num_edges() == 2 * n * (n + 1) + n * n);
    CHECK(mesh.num_triangles() == 2 * n * n);
    CHECK(mesh.num_boundary_edges() == 4 * n);
    CHECK(mesh.num_vertices() - mesh.num_edges() + mesh.num_triangles() == 1);
    CHECK(validate(mesh).empty());
  }
}

TEST_CASE("element geometry: area sum, diameters, max diameter") {
  const Mesh mesh = build_structured(4);
  double area = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    CHECK(mesh.tri_area[t] > 0.0);
    area += mesh.tri_area[t];
    CHECK(mesh.tri_diameter[t] == doctest::Approx(std::sqrt(2.0) / 4).epsilon(1e-14));
  }
  CHECK(area == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mesh.h == doctest::Approx(std::sqrt(2.0) / 4).epsilon(1e-14));
}

TEST_CASE("edge orientation and outward normals") {
  const Mesh mesh = build_structured(3);
  for (const Edge& e : mesh.edges) CHECK(e.a < e.b);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    CHECK(mesh.edge_normal[e].norm() == doctest::Approx(1.0).epsilon(1e-14));
    // normal is the global tangent rotated clockwise
    const Vec2 d = mesh.vertices[mesh.edges[e].b] - mesh.vertices[mesh.edges[e].a];
    CHECK(std::abs(d.dot(mesh.edge_normal[e])) < 1e-14);
  }
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    for (int l = 0; l < 3; ++l) {
      const int e = mesh.tri_edges[t][l];
      const Vec2 out = mesh.outward_normal(t, l);
      // outward means pointing away from the element centroid
      CHECK(out.dot(mesh.edge_midpoint[e] - mesh.tri_centroid[t]) > 0.0);
    }
  }
}

TEST_CASE("interior edges see opposite outward normals") {
  const Mesh mesh = build_structured(2);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (mesh.edges[e].boundary) continue;
    Vec2 sum = Vec2::Zero();
    int seen = 0;
    for (int t = 0; t < mesh.num_triangles(); ++t)
      for (int l = 0; l < 3; ++l)
        if (mesh.tri_edges[t][l] == e) {
          sum += mesh.outward_normal(t, l);
          ++seen;
        }
    CHECK(seen == 2);
    CHECK(sum.norm() < 1e-15);
  }
}

TEST_CASE("red refinement matches the finer structured grid") {
  const Mesh fine = refine(build_structured(10));
  const Mesh direct = build_structured(20);
  CHECK(fine.num_vertices() == direct.num_vertices());
  CHECK(fine.num_edges() == direct.num_edges());
  CHECK(fine.num_triangles() == direct.num_triangles());
  CHECK(fine.num_boundary_edges() == direct.num_boundary_edges());
  CHECK(fine.h == doctest::Approx(direct.h).epsilon(1e-14));
  CHECK(validate(fine).empty());
  double area = 0.0;
  for (int t = 0; t < fine.num_triangles(); ++t) area += fine.tri_area[t];
  CHECK(area == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("validate flags broken meshes") {
  // flipped triangle: negative area
  Mesh bad = from_triangles({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, {{0, 2, 1}});
  CHECK(!validate(bad).empty());
  // healthy single element
  Mesh good = from_triangles({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, {{0, 1, 2}});
  CHECK(validate(good).empty());
  CHECK(good.num_boundary_edges() == 3);
}

TEST_CASE("mesh dump writes header and coordinates") {
  const Mesh mesh = build_structured(1);
  const std::string path = "mesh_dump_test.txt";
  dump_mesh(mesh, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  int nv = 0, ne = 0, nt = 0;
  in >> nv >> ne >> nt;
  CHECK(nv == 4);
  CHECK(ne == 5);
  CHECK(nt == 2);
  double x = -1.0, y = -1.0;
  in >> x >> y;
  CHECK(x == 0.0);
  CHECK(y == 0.0);
  std::remove(path.c_str());
}

}  // TEST_SUITE
