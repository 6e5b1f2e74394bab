#pragma once

#include <Eigen/Dense>

#include "wgs/basis.hpp"
#include "wgs/mesh.hpp"

namespace wgs {

/// Coefficient storage for weak functions {v0, vb}: an interior P_k polynomial
/// per element (scaled monomial coefficients) and a P_{k+1} trace polynomial
/// per edge (Legendre coefficients in the global edge orientation). Trace
/// coefficients are stored once per edge, which makes vb single valued by
/// construction. components is 1 for scalar weak functions and 2 for velocity.
struct WeakFunctionVector {
  int k = 0;
  int components = 1;
  int n_tri = 0;
  int n_edge = 0;
  bool homogeneous_boundary = false;
  Eigen::VectorXd interior;  ///< layout [element][component][basis]
  Eigen::VectorXd trace;     ///< layout [edge][component][basis]

  static WeakFunctionVector zero(const Mesh& mesh, int k, int components,
                                 bool homogeneous_boundary = false);

  int interior_dim() const { return tri_basis_dim(k); }
  int trace_dim() const { return k + 2; }

  int interior_offset(int tri, int comp) const {
    return (tri * components + comp) * interior_dim();
  }
  int trace_offset(int edge, int comp) const { return (edge * components + comp) * trace_dim(); }

  Eigen::VectorBlock<Eigen::VectorXd> interior_coeffs(int tri, int comp) {
    return interior.segment(interior_offset(tri, comp), interior_dim());
  }
  Eigen::VectorBlock<const Eigen::VectorXd> interior_coeffs(int tri, int comp) const {
    return interior.segment(interior_offset(tri, comp), interior_dim());
  }
  Eigen::VectorBlock<Eigen::VectorXd> trace_coeffs(int edge, int comp) {
    return trace.segment(trace_offset(edge, comp), trace_dim());
  }
  Eigen::VectorBlock<const Eigen::VectorXd> trace_coeffs(int edge, int comp) const {
    return trace.segment(trace_offset(edge, comp), trace_dim());
  }

  /// Sets every boundary-edge coefficient to zero and flags the function as
  /// living in the homogeneous-boundary space.
  void zero_boundary(const Mesh& mesh);
};

/// Element-wise P_k pressure coefficients (scaled monomial basis).
struct PressureVector {
  int k = 0;
  int n_tri = 0;
  bool mean_zero = false;
  Eigen::VectorXd coeffs;  ///< layout [element][basis]

  static PressureVector zero(const Mesh& mesh, int k);

  int dim_per_element() const { return tri_basis_dim(k); }
  Eigen::VectorBlock<Eigen::VectorXd> element_coeffs(int tri) {
    return coeffs.segment(tri * dim_per_element(), dim_per_element());
  }
  Eigen::VectorBlock<const Eigen::VectorXd> element_coeffs(int tri) const {
    return coeffs.segment(tri * dim_per_element(), dim_per_element());
  }
};

}  // namespace wgs
