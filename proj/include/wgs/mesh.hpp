#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wgs {

using Vec2 = Eigen::Vector2d;

struct Edge {
  int a = -1;            ///< first endpoint, a < b (global orientation a -> b)
  int b = -1;            ///< second endpoint
  bool boundary = false;
};

/// Conforming triangulation of the unit square.
///
/// Triangles are stored counterclockwise; edges carry a global orientation
/// (lower vertex index first) so that single-valued edge data can be stored
/// once per edge. The per-(triangle, local edge) sign says whether the local
/// counterclockwise traversal agrees with the global orientation; the element
/// outward normal on that edge is sign * edge_normal.
///
/// A Mesh is immutable after construction and safe to read from many threads.
struct Mesh {
  std::vector<Vec2> vertices;
  std::vector<std::array<int, 3>> triangles;      ///< CCW vertex triples
  std::vector<Edge> edges;
  std::vector<std::array<int, 3>> tri_edges;      ///< local edge l joins vertices l and (l+1)%3
  std::vector<std::array<int, 3>> tri_edge_sign;  ///< +1 if local traversal matches a -> b
  double h = 0.0;                                 ///< max element diameter

  // cached geometry
  std::vector<double> tri_area;
  std::vector<Vec2> tri_centroid;
  std::vector<double> tri_diameter;
  std::vector<double> edge_length;
  std::vector<Vec2> edge_midpoint;
  std::vector<Vec2> edge_normal;  ///< unit normal to the right of a -> b

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_triangles() const { return static_cast<int>(triangles.size()); }
  int num_boundary_edges() const;
  int num_interior_edges() const { return num_edges() - num_boundary_edges(); }

  /// Outward unit normal of triangle `tri` on its local edge `local_edge` (0..2).
  Vec2 outward_normal(int tri, int local_edge) const;
};

/// n-by-n grid of squares on [0,1]^2, each square split by the diagonal from
/// its lower-left to its upper-right corner. Grid pitch 1/n; element diameter
/// sqrt(2)/n. Throws std::invalid_argument for n < 1.
Mesh build_structured(int n);

/// Regular red refinement: every edge is bisected at its midpoint and each
/// triangle is replaced by 4 congruent children. Grid pitch halves.
Mesh refine(const Mesh& mesh);

/// Rebuild the full edge topology and cached geometry from vertex coordinates
/// and CCW triangle triples.
Mesh from_triangles(std::vector<Vec2> vertices, std::vector<std::array<int, 3>> triangles);

/// Invariant check. Returns one human-readable entry per violation; an empty
/// list means the mesh is consistent. Violations are data, not errors.
std::vector<std::string> validate(const Mesh& mesh);

/// Plain-text dump: header "nv ne nt", vertex coordinate lines, edge lines
/// "a b boundary_flag", triangle lines "i j k".
void dump_mesh(const Mesh& mesh, const std::string& path);

}  // namespace wgs
