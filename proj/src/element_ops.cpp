#include "wgs/element_ops.hpp"

#include <Eigen/Cholesky>

namespace wgs {

ElementOperators::ElementOperators(const Mesh& mesh, int tri, int k,
                                   const QuadratureRule& tri_rule,
                                   const QuadratureRule& edge_rule)
    : tri_(tri),
      k_(k),
      interior_basis_(mesh, tri, k),
      grad_basis_(mesh, tri, k + 1) {
  const int ni = interior_dim();
  const int nt = trace_dim();
  const int ng = grad_dim();
  const int nloc = scalar_local_dim();

  grad_mass_ = local_mass_matrix(grad_basis_, mesh, tri, tri_rule);
  interior_mass_ = local_mass_matrix(interior_basis_, mesh, tri, tri_rule);

  // Right side of the defining identity: row block for q = (phi_i, 0) in Rx,
  // q = (0, phi_i) in Ry. Interior columns carry -(v0, div q)_K.
  Eigen::MatrixXd Rx = Eigen::MatrixXd::Zero(ng, nloc);
  Eigen::MatrixXd Ry = Eigen::MatrixXd::Zero(ng, nloc);

  const TriQuadPoints qp = map_to_triangle(tri_rule, mesh, tri);
  for (int q = 0; q < qp.w.size(); ++q) {
    const Eigen::VectorXd psi = interior_basis_.values(qp.x[q]);
    const Eigen::Matrix<double, Eigen::Dynamic, 2> dphi = grad_basis_.gradients(qp.x[q]);
    Rx.leftCols(ni).noalias() -= qp.w(q) * dphi.col(0) * psi.transpose();
    Ry.leftCols(ni).noalias() -= qp.w(q) * dphi.col(1) * psi.transpose();
  }

  // Trace columns carry <vb, q.n>_dK, with the outward normal fixed per edge.
  for (int l = 0; l < 3; ++l) {
    const int edge = mesh.tri_edges[tri][l];
    const Vec2 n = mesh.outward_normal(tri, l);
    const EdgeBasis eb(mesh, edge, k + 1);
    const EdgeQuadPoints ep = map_to_edge(edge_rule, mesh, edge);
    Eigen::MatrixXd E = Eigen::MatrixXd::Zero(ng, nt);
    for (int q = 0; q < ep.w.size(); ++q)
      E.noalias() += ep.w(q) * grad_basis_.values(ep.x[q]) * eb.values(ep.s(q)).transpose();
    Rx.middleCols(ni + l * nt, nt) = n.x() * E;
    Ry.middleCols(ni + l * nt, nt) = n.y() * E;
  }

  const Eigen::LLT<Eigen::MatrixXd> llt(grad_mass_);
  G_.resize(2 * ng, nloc);
  G_.topRows(ng) = llt.solve(Rx);
  G_.bottomRows(ng) = llt.solve(Ry);

  // div_w of a vector is the trace of the component-wise weak gradient
  D_.resize(ng, 2 * nloc);
  D_.leftCols(nloc) = G_.topRows(ng);
  D_.rightCols(nloc) = G_.bottomRows(ng);

  Eigen::MatrixXd S = G_.topRows(ng).transpose() * grad_mass_ * G_.topRows(ng);
  S.noalias() += G_.bottomRows(ng).transpose() * grad_mass_ * G_.bottomRows(ng);
  stiffness_ = 0.5 * (S + S.transpose());

  const Eigen::MatrixXd W = cross_mass_matrix(interior_basis_, grad_basis_, mesh, tri, tri_rule);
  div_coupling_ = W * D_;
}

Eigen::VectorXd ElementOperators::apply_weak_gradient(const Eigen::VectorXd& scalar_local) const {
  return G_ * scalar_local;
}

Eigen::VectorXd ElementOperators::apply_weak_divergence(const Eigen::VectorXd& vector_local) const {
  return D_ * vector_local;
}

Eigen::VectorXd gather_scalar_local(const WeakFunctionVector& v, const Mesh& mesh, int tri,
                                    int comp) {
  const int ni = v.interior_dim();
  const int nt = v.trace_dim();
  Eigen::VectorXd local(ni + 3 * nt);
  local.head(ni) = v.interior_coeffs(tri, comp);
  for (int l = 0; l < 3; ++l)
    local.segment(ni + l * nt, nt) = v.trace_coeffs(mesh.tri_edges[tri][l], comp);
  return local;
}

Eigen::VectorXd gather_local(const WeakFunctionVector& v, const Mesh& mesh, int tri) {
  const int nloc = v.interior_dim() + 3 * v.trace_dim();
  Eigen::VectorXd local(v.components * nloc);
  for (int c = 0; c < v.components; ++c)
    local.segment(c * nloc, nloc) = gather_scalar_local(v, mesh, tri, c);
  return local;
}

}  // namespace wgs
