#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "wgs/mesh.hpp"
#include "wgs/quadrature.hpp"
#include "wgs/weak_function.hpp"

namespace wgs {

using ScalarFn = std::function<double(const Vec2&)>;
using VectorFn = std::function<Vec2(const Vec2&)>;
/// Matrix-valued gradient: entry (m, d) = d u_m / d x_d.
using GradFn = std::function<Eigen::Matrix2d(const Vec2&)>;

/// Local L2 projection of u onto P_l on one element; returns scaled monomial
/// coefficients.
Eigen::VectorXd project_interior(const ScalarFn& u, const Mesh& mesh, int tri, int l,
                                 const QuadratureRule& rule);

/// L2 projection of u onto P_m on one edge; returns Legendre coefficients in
/// the global edge orientation.
Eigen::VectorXd project_edge(const ScalarFn& u, const Mesh& mesh, int edge, int m,
                             const QuadratureRule& rule);

/// Q_h: interior part is the element-wise P_k projection, trace part the
/// edge-wise P_{k+1} projection. u supplies one function per component.
WeakFunctionVector project_Qh(const std::vector<ScalarFn>& u, const Mesh& mesh, int k,
                              const RulePair& rules);

/// Element-wise [P_{k+1}]^2 projection defined by moment conditions:
/// edge-normal moments against P_{k+1}(e) on each edge, and for k >= 1
/// interior moments against gradients of P_k and curls of the bubble space
/// lambda1 lambda2 lambda3 P_{k-1}. Supported for k in {0, 1}.
struct PiProjection {
  int k = 0;
  int n_tri = 0;
  Eigen::VectorXd coeffs;  ///< layout [element][2 * dim P_{k+1}], x-polynomial first

  int dim_per_component() const { return tri_basis_dim(k + 1); }
  Eigen::VectorBlock<const Eigen::VectorXd> element_coeffs(int tri) const {
    return coeffs.segment(tri * 2 * dim_per_component(), 2 * dim_per_component());
  }
  /// Value of the projected field at x inside element `tri`.
  Vec2 evaluate(const Mesh& mesh, int tri, const Vec2& x) const;
  /// Divergence of the projected field at x inside element `tri`.
  double divergence(const Mesh& mesh, int tri, const Vec2& x) const;
};

PiProjection project_pi(const VectorFn& u, const Mesh& mesh, int k, const RulePair& rules);

}  // namespace wgs
