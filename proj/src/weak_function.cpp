#include "wgs/weak_function.hpp"

namespace wgs {

WeakFunctionVector WeakFunctionVector::zero(const Mesh& mesh, int k, int components,
                                            bool homogeneous_boundary) {
  WeakFunctionVector v;
  v.k = k;
  v.components = components;
  v.n_tri = mesh.num_triangles();
  v.n_edge = mesh.num_edges();
  v.homogeneous_boundary = homogeneous_boundary;
  v.interior = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(v.n_tri) * components * v.interior_dim());
  v.trace = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(v.n_edge) * components * v.trace_dim());
  return v;
}

void WeakFunctionVector::zero_boundary(const Mesh& mesh) {
  for (int e = 0; e < n_edge; ++e) {
    if (!mesh.edges[e].boundary) continue;
    for (int c = 0; c < components; ++c) trace_coeffs(e, c).setZero();
  }
  homogeneous_boundary = true;
}

PressureVector PressureVector::zero(const Mesh& mesh, int k) {
  PressureVector p;
  p.k = k;
  p.n_tri = mesh.num_triangles();
  p.coeffs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p.n_tri) * p.dim_per_element());
  return p;
}

}  // namespace wgs
