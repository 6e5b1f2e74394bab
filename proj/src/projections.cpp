#include "wgs/projections.hpp"

#include <stdexcept>

#include <Eigen/Cholesky>
#include <Eigen/QR>

#include "wgs/basis.hpp"

namespace wgs {

Eigen::VectorXd project_interior(const ScalarFn& u, const Mesh& mesh, int tri, int l,
                                 const QuadratureRule& rule) {
  const TriBasis basis(mesh, tri, l);
  const TriQuadPoints qp = map_to_triangle(rule, mesh, tri);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(basis.dim(), basis.dim());
  Eigen::VectorXd b = Eigen::VectorXd::Zero(basis.dim());
  for (int q = 0; q < qp.w.size(); ++q) {
    const Eigen::VectorXd phi = basis.values(qp.x[q]);
    M.noalias() += qp.w(q) * phi * phi.transpose();
    b.noalias() += qp.w(q) * u(qp.x[q]) * phi;
  }
  return Eigen::LLT<Eigen::MatrixXd>(M).solve(b);
}

Eigen::VectorXd project_edge(const ScalarFn& u, const Mesh& mesh, int edge, int m,
                             const QuadratureRule& rule) {
  const EdgeBasis basis(mesh, edge, m);
  const EdgeQuadPoints ep = map_to_edge(rule, mesh, edge);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(basis.dim());
  for (int q = 0; q < ep.w.size(); ++q) b.noalias() += ep.w(q) * u(ep.x[q]) * basis.values(ep.s(q));
  // Legendre Gram is diagonal with entries |e|/(2i+1)
  for (int i = 0; i < basis.dim(); ++i) b(i) *= (2 * i + 1) / basis.length();
  return b;
}

WeakFunctionVector project_Qh(const std::vector<ScalarFn>& u, const Mesh& mesh, int k,
                              const RulePair& rules) {
  WeakFunctionVector v = WeakFunctionVector::zero(mesh, k, static_cast<int>(u.size()));
  for (int c = 0; c < v.components; ++c) {
    for (int t = 0; t < mesh.num_triangles(); ++t)
      v.interior_coeffs(t, c) = project_interior(u[c], mesh, t, k, rules.tri);
    for (int e = 0; e < mesh.num_edges(); ++e)
      v.trace_coeffs(e, c) = project_edge(u[c], mesh, e, k + 1, rules.edge);
  }
  return v;
}

Vec2 PiProjection::evaluate(const Mesh& mesh, int tri, const Vec2& x) const {
  const TriBasis basis(mesh, tri, k + 1);
  const Eigen::VectorXd phi = basis.values(x);
  const auto c = element_coeffs(tri);
  const int nd = dim_per_component();
  return Vec2(phi.dot(c.head(nd)), phi.dot(c.tail(nd)));
}

double PiProjection::divergence(const Mesh& mesh, int tri, const Vec2& x) const {
  const TriBasis basis(mesh, tri, k + 1);
  const Eigen::Matrix<double, Eigen::Dynamic, 2> dphi = basis.gradients(x);
  const auto c = element_coeffs(tri);
  const int nd = dim_per_component();
  return dphi.col(0).dot(c.head(nd)) + dphi.col(1).dot(c.tail(nd));
}

PiProjection project_pi(const VectorFn& u, const Mesh& mesh, int k, const RulePair& rules) {
  if (k != 0 && k != 1)
    throw std::invalid_argument("project_pi: supported for k in {0, 1} only");

  PiProjection pi;
  pi.k = k;
  pi.n_tri = mesh.num_triangles();
  const int nd = pi.dim_per_component();
  const int n = 2 * nd;
  pi.coeffs.resize(static_cast<Eigen::Index>(pi.n_tri) * n);

  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriBasis basis(mesh, t, k + 1);
    Eigen::MatrixXd A(n, n);
    Eigen::VectorXd rhs(n);
    int row = 0;

    // edge-normal moments against P_{k+1}(e); the fixed global normal scales
    // both sides, so its sign drops out
    for (int l = 0; l < 3; ++l) {
      const int edge = mesh.tri_edges[t][l];
      const Vec2 nrm = mesh.edge_normal[edge];
      const EdgeBasis eb(mesh, edge, k + 1);
      const EdgeQuadPoints ep = map_to_edge(rules.edge, mesh, edge);
      Eigen::MatrixXd Ax = Eigen::MatrixXd::Zero(eb.dim(), nd);
      Eigen::MatrixXd Ay = Eigen::MatrixXd::Zero(eb.dim(), nd);
      Eigen::VectorXd be = Eigen::VectorXd::Zero(eb.dim());
      for (int q = 0; q < ep.w.size(); ++q) {
        const Eigen::VectorXd leg = eb.values(ep.s(q));
        const Eigen::VectorXd phi = basis.values(ep.x[q]);
        Ax.noalias() += (ep.w(q) * nrm.x()) * leg * phi.transpose();
        Ay.noalias() += (ep.w(q) * nrm.y()) * leg * phi.transpose();
        be.noalias() += ep.w(q) * u(ep.x[q]).dot(nrm) * leg;
      }
      A.block(row, 0, eb.dim(), nd) = Ax;
      A.block(row, nd, eb.dim(), nd) = Ay;
      rhs.segment(row, eb.dim()) = be;
      row += eb.dim();
    }

    if (k == 1) {
      const TriQuadPoints qp = map_to_triangle(rules.tri, mesh, t);
      const TriBasis pk(mesh, t, k);

      // gradient of the element bubble lambda0 lambda1 lambda2
      const auto& tv = mesh.triangles[t];
      const Vec2 va = mesh.vertices[tv[0]], vb = mesh.vertices[tv[1]], vc = mesh.vertices[tv[2]];
      Eigen::Matrix2d J;
      J.col(0) = vb - va;
      J.col(1) = vc - va;
      const Eigen::Matrix2d Jinv = J.inverse();
      const Vec2 g1 = Jinv.row(0).transpose(), g2 = Jinv.row(1).transpose(), g0 = -g1 - g2;

      // interior moments: u.grad(q) for q in P_k modulo constants, and
      // u.curl(bubble); together with the edge rows this is unisolvent
      Eigen::MatrixXd Ai = Eigen::MatrixXd::Zero(3, n);
      Eigen::VectorXd bi = Eigen::VectorXd::Zero(3);
      for (int q = 0; q < qp.w.size(); ++q) {
        const Eigen::VectorXd phi = basis.values(qp.x[q]);
        const Eigen::Matrix<double, Eigen::Dynamic, 2> dq = pk.gradients(qp.x[q]);
        const Vec2 lam12 = Jinv * (qp.x[q] - va);
        const double l1 = lam12.x(), l2 = lam12.y(), l0 = 1.0 - l1 - l2;
        const Vec2 grad_b = l1 * l2 * g0 + l0 * l2 * g1 + l0 * l1 * g2;
        const Vec2 curl_b(grad_b.y(), -grad_b.x());
        const Vec2 uq = u(qp.x[q]);
        for (int m = 0; m < 2; ++m) {  // skip the constant: rows use pk basis 1, 2
          const Vec2 g(dq(m + 1, 0), dq(m + 1, 1));
          Ai.block(m, 0, 1, nd).noalias() += (qp.w(q) * g.x()) * phi.transpose();
          Ai.block(m, nd, 1, nd).noalias() += (qp.w(q) * g.y()) * phi.transpose();
          bi(m) += qp.w(q) * uq.dot(g);
        }
        Ai.block(2, 0, 1, nd).noalias() += (qp.w(q) * curl_b.x()) * phi.transpose();
        Ai.block(2, nd, 1, nd).noalias() += (qp.w(q) * curl_b.y()) * phi.transpose();
        bi(2) += qp.w(q) * uq.dot(curl_b);
      }
      A.bottomRows(3) = Ai;
      rhs.tail(3) = bi;
      row += 3;
    }

    if (row != n) throw std::logic_error("project_pi: moment count mismatch");
    // the moment conditions are exactly as many as the unknowns; unisolvence
    // is a property of the element, so a singular system is a hard error
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    if (!qr.isInvertible())
      throw std::runtime_error("project_pi: singular moment system on element " +
                               std::to_string(t));
    pi.coeffs.segment(static_cast<Eigen::Index>(t) * n, n) = qr.solve(rhs);
  }
  return pi;
}

}  // namespace wgs
