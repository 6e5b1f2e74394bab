#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "wgs/mesh.hpp"
#include "wgs/quadrature.hpp"

namespace wgs {

constexpr int tri_basis_dim(int degree) { return (degree + 1) * (degree + 2) / 2; }

/// Monomial basis in scaled centered coordinates ((x-xc)/hK, (y-yc)/hK) on one
/// element, ordered by total degree. The scaling keeps local Gram matrices
/// well conditioned independently of h on shape-regular elements. Evaluation
/// outside the element is permitted (projections use it).
class TriBasis {
 public:
  TriBasis(const Mesh& mesh, int tri, int degree);
  TriBasis(Vec2 center, double scale, int degree);

  int degree() const { return degree_; }
  int dim() const { return tri_basis_dim(degree_); }
  Vec2 center() const { return center_; }
  double scale() const { return scale_; }
  const std::vector<std::array<int, 2>>& exponents() const { return exps_; }

  Eigen::VectorXd values(const Vec2& x) const;
  /// Row i holds (d/dx, d/dy) of basis function i at x.
  Eigen::Matrix<double, Eigen::Dynamic, 2> gradients(const Vec2& x) const;

 private:
  Vec2 center_;
  double scale_;
  int degree_;
  std::vector<std::array<int, 2>> exps_;
};

/// Legendre polynomials in the normalized arc-length parameter s in [0,1]
/// running along the global edge orientation. Orthogonal on the edge, so the
/// edge mass matrix is diagonal with entries |e|/(2i+1).
class EdgeBasis {
 public:
  EdgeBasis(const Mesh& mesh, int edge, int degree);

  int degree() const { return degree_; }
  int dim() const { return degree_ + 1; }
  double length() const { return length_; }

  Eigen::VectorXd values(double s) const;

 private:
  int degree_;
  double length_;
};

/// M_ij = integral over the element of phi_i phi_j. Requires rule exactness
/// >= 2*degree; the result is symmetric positive definite.
Eigen::MatrixXd local_mass_matrix(const TriBasis& basis, const Mesh& mesh, int tri,
                                  const QuadratureRule& rule);

/// Exact diagonal edge Gram matrix of the Legendre basis.
Eigen::MatrixXd local_mass_matrix(const EdgeBasis& basis);

/// Cross Gram matrix C_ij = integral of a_i b_j over the element.
Eigen::MatrixXd cross_mass_matrix(const TriBasis& a, const TriBasis& b, const Mesh& mesh,
                                  int tri, const QuadratureRule& rule);

}  // namespace wgs
