#pragma once

#include <Eigen/Dense>

#include "wgs/basis.hpp"
#include "wgs/mesh.hpp"
#include "wgs/quadrature.hpp"
#include "wgs/weak_function.hpp"

namespace wgs {

/// Element-local realizations of the weak gradient and weak divergence.
///
/// Scalar local DOF order: the (k+1)(k+2)/2 interior coefficients, then the
/// k+2 trace coefficients of local edges 0, 1, 2 (in the global edge
/// orientation). Vector local DOFs stack component 0 before component 1.
///
/// The weak gradient matrix G maps scalar local DOFs to the coefficients of
/// grad_w v in [P_{k+1}]^2, x-component polynomial first. It is assembled by
/// forming the right side of the defining integration-by-parts identity
/// (-(v0, div q)_K + <vb, q.n>_dK for all q in [P_{k+1}]^2) and solving
/// against the P_{k+1} mass matrix.
///
/// The weak divergence matrix D maps vector local DOFs to the P_{k+1}
/// coefficients of div_w v; it reuses the gradient blocks since div_w v is
/// the trace of the component-wise weak gradient.
class ElementOperators {
 public:
  ElementOperators(const Mesh& mesh, int tri, int k, const QuadratureRule& tri_rule,
                   const QuadratureRule& edge_rule);

  int k() const { return k_; }
  int tri() const { return tri_; }
  int interior_dim() const { return tri_basis_dim(k_); }
  int trace_dim() const { return k_ + 2; }
  int scalar_local_dim() const { return interior_dim() + 3 * trace_dim(); }
  int grad_dim() const { return tri_basis_dim(k_ + 1); }

  /// G: (2 * grad_dim) x scalar_local_dim.
  const Eigen::MatrixXd& weak_gradient() const { return G_; }
  /// D: grad_dim x (2 * scalar_local_dim).
  const Eigen::MatrixXd& weak_divergence() const { return D_; }
  /// Per-component stiffness G^T diag(M,M) G, symmetric positive semidefinite.
  const Eigen::MatrixXd& stiffness() const { return stiffness_; }
  /// Coupling (div_w v, psi_i)_K against the interior P_k basis:
  /// interior_dim x (2 * scalar_local_dim).
  const Eigen::MatrixXd& div_coupling() const { return div_coupling_; }
  /// P_{k+1} mass matrix of the gradient basis.
  const Eigen::MatrixXd& grad_mass() const { return grad_mass_; }
  /// P_k mass matrix of the interior basis (also the pressure Gram matrix).
  const Eigen::MatrixXd& interior_mass() const { return interior_mass_; }

  const TriBasis& interior_basis() const { return interior_basis_; }
  const TriBasis& grad_basis() const { return grad_basis_; }

  /// Coefficients of grad_w v for one scalar component's local DOFs;
  /// first grad_dim entries are the x-component polynomial.
  Eigen::VectorXd apply_weak_gradient(const Eigen::VectorXd& scalar_local) const;
  /// Coefficients of div_w v for stacked vector local DOFs.
  Eigen::VectorXd apply_weak_divergence(const Eigen::VectorXd& vector_local) const;

 private:
  int tri_;
  int k_;
  TriBasis interior_basis_;
  TriBasis grad_basis_;
  Eigen::MatrixXd grad_mass_;
  Eigen::MatrixXd interior_mass_;
  Eigen::MatrixXd G_;
  Eigen::MatrixXd D_;
  Eigen::MatrixXd stiffness_;
  Eigen::MatrixXd div_coupling_;
};

/// Local DOFs of one scalar component of v on element `tri`, in the
/// ElementOperators ordering.
Eigen::VectorXd gather_scalar_local(const WeakFunctionVector& v, const Mesh& mesh, int tri,
                                    int comp);

/// Stacked local DOFs of all components.
Eigen::VectorXd gather_local(const WeakFunctionVector& v, const Mesh& mesh, int tri);

}  // namespace wgs
