#pragma once

#include <vector>

#include "wgs/basis.hpp"
#include "wgs/mesh.hpp"

namespace wgs {

/// Global unknown numbering for the saddle-point system: velocity element
/// interiors (2 components x dim P_k per element), velocity traces on interior
/// edges (2 x (k+2) per edge; boundary-edge traces are fixed data, not
/// unknowns), element-wise P_k pressures, and one Lagrange multiplier for the
/// pressure mean-zero constraint.
struct DofMap {
  int k = 0;
  int n_tri = 0;
  int n_edge = 0;
  std::vector<int> edge_slot;  ///< per edge: dense interior-edge index, or -1 on the boundary
  int n_interior_edge = 0;
  int vel_trace_offset = 0;
  int pressure_offset = 0;
  int multiplier_index = 0;
  int total = 0;

  int interior_dim() const { return tri_basis_dim(k); }
  int trace_dim() const { return k + 2; }
  int velocity_unknowns() const { return pressure_offset; }
  int pressure_unknowns() const { return multiplier_index - pressure_offset; }

  /// First global index of (element, component) interior coefficients.
  int interior_base(int tri, int comp) const { return (tri * 2 + comp) * interior_dim(); }
  /// First global index of (edge, component) trace coefficients; -1 on boundary edges.
  int trace_base(int edge, int comp) const {
    const int slot = edge_slot[edge];
    if (slot < 0) return -1;
    return vel_trace_offset + (slot * 2 + comp) * trace_dim();
  }
  int pressure_base(int tri) const { return pressure_offset + tri * interior_dim(); }
};

DofMap build_dof_map(const Mesh& mesh, int k);

/// Unknown count of the structured n-by-n problem without building the mesh.
long predict_unknowns(int n, int k);

}  // namespace wgs
