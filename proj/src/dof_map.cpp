#include "wgs/dof_map.hpp"

namespace wgs {

DofMap build_dof_map(const Mesh& mesh, int k) {
  DofMap map;
  map.k = k;
  map.n_tri = mesh.num_triangles();
  map.n_edge = mesh.num_edges();
  map.edge_slot.resize(map.n_edge, -1);
  for (int e = 0; e < map.n_edge; ++e)
    if (!mesh.edges[e].boundary) map.edge_slot[e] = map.n_interior_edge++;

  map.vel_trace_offset = map.n_tri * 2 * map.interior_dim();
  map.pressure_offset = map.vel_trace_offset + map.n_interior_edge * 2 * map.trace_dim();
  map.multiplier_index = map.pressure_offset + map.n_tri * map.interior_dim();
  map.total = map.multiplier_index + 1;
  return map;
}

long predict_unknowns(int n, int k) {
  const long nt = 2L * n * n;
  const long interior_edges = 3L * n * n - 2L * n;  // 2n(n+1) + n^2 total, 4n on the boundary
  const long nd = tri_basis_dim(k);
  return nt * 2 * nd + interior_edges * 2 * (k + 2) + nt * nd + 1;
}

}  // namespace wgs
