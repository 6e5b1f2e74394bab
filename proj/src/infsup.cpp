#include "wgs/infsup.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "wgs/basis.hpp"
#include "wgs/dof_map.hpp"
#include "wgs/system.hpp"

namespace wgs {

double estimate_infsup(const Mesh& mesh, int k) {
  const DofMap probe = build_dof_map(mesh, k);
  if (probe.total > 20000)
    throw std::invalid_argument("estimate_infsup: mesh too large for the dense Schur eigensolve");

  // assemble with zero data; only the matrix blocks are needed
  const ScalarFn zero_fn = [](const Vec2&) { return 0.0; };
  const StokesData data{{zero_fn, zero_fn}, {zero_fn, zero_fn}};
  const SaddleSystem sys = assemble(mesh, k, data);
  const DofMap& dofs = sys.dofs;
  const int nv = dofs.velocity_unknowns();
  const int np = dofs.pressure_unknowns();
  const int po = dofs.pressure_offset;

  // split off the velocity block and the divergence coupling
  std::vector<Eigen::Triplet<double>> ta;
  Eigen::MatrixXd Bt = Eigen::MatrixXd::Zero(nv, np);  // Bm^T
  for (int col = 0; col < sys.matrix.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(sys.matrix, col); it; ++it) {
      const int r = static_cast<int>(it.row()), c = static_cast<int>(it.col());
      if (r < nv && c < nv)
        ta.emplace_back(r, c, it.value());
      else if (r < nv && c >= po && c < po + np)
        Bt(r, c - po) = it.value();
    }
  }
  Eigen::SparseMatrix<double> A(nv, nv);
  A.setFromTriplets(ta.begin(), ta.end());

  // A is positive definite on the homogeneous-boundary velocity space
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(A);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("estimate_infsup: velocity block factorization failed");
  const Eigen::MatrixXd X = llt.solve(Bt);
  Eigen::MatrixXd S = Bt.transpose() * X;
  S = ((S + S.transpose()) * 0.5).eval();

  // pressure Gram matrix, block diagonal per element
  const QuadratureRule rule = assembly_rules(k).tri;
  const int ni = dofs.interior_dim();
  Eigen::MatrixXd Mp = Eigen::MatrixXd::Zero(np, np);
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const TriBasis basis(mesh, t, k);
    Mp.block(t * ni, t * ni, ni, ni) = local_mass_matrix(basis, mesh, t, rule);
  }

  // deflate the constant pressure: Z spans the Mp-orthogonal complement,
  // obtained from the Householder reflector sending Mp*e to a coordinate axis
  Eigen::VectorXd e = Eigen::VectorXd::Zero(np);
  for (int t = 0; t < mesh.num_triangles(); ++t) e(t * ni) = 1.0;  // psi_0 == 1
  const Eigen::VectorXd w = Mp * e;
  Eigen::VectorXd u = w;
  u(0) += (w(0) >= 0.0 ? 1.0 : -1.0) * w.norm();
  const Eigen::MatrixXd H =
      Eigen::MatrixXd::Identity(np, np) - (2.0 / u.squaredNorm()) * u * u.transpose();
  const Eigen::MatrixXd Z = H.rightCols(np - 1);

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(
      Z.transpose() * S * Z, Z.transpose() * Mp * Z);
  if (ges.info() != Eigen::Success)
    throw std::runtime_error("estimate_infsup: generalized eigensolve failed");
  const double lambda_min = ges.eigenvalues()(0);
  return lambda_min > 0.0 ? std::sqrt(lambda_min) : 0.0;
}

}  // namespace wgs
