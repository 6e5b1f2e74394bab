#pragma once

#include <Eigen/Dense>

#include "wgs/mesh.hpp"

namespace wgs {

/// Point/weight list on the reference triangle (0,0),(1,0),(0,1) or on the
/// unit interval [0,1]. Weights are positive and sum to the reference measure
/// (1/2 for the triangle, 1 for the interval).
struct QuadratureRule {
  Eigen::Matrix<double, Eigen::Dynamic, 2> points;  ///< (x,y); column 1 unused for edges
  Eigen::VectorXd weights;
  int exactness = 0;

  int size() const { return static_cast<int>(weights.size()); }
};

/// Positive-weight rule on the reference triangle, exact for all polynomials
/// of total degree <= exactness, 1 <= exactness <= 20. Built as a conical
/// product Gauss rule averaged over the six vertex permutations, so the rule
/// is symmetric under the triangle symmetry group.
QuadratureRule tri_quadrature(int exactness);

/// Gauss-Legendre rule with `points` nodes on [0,1] (1 <= points <= 16);
/// exact to degree 2*points - 1.
QuadratureRule edge_quadrature(int points);

/// A reference rule pushed forward to a physical triangle; weights include
/// the Jacobian.
struct TriQuadPoints {
  std::vector<Vec2> x;
  Eigen::VectorXd w;
};
TriQuadPoints map_to_triangle(const QuadratureRule& rule, const Mesh& mesh, int tri);

/// A reference rule pushed forward to a physical edge, parameterized by the
/// global orientation. s holds the arc-length fraction from the edge start.
struct EdgeQuadPoints {
  std::vector<Vec2> x;
  Eigen::VectorXd w;
  Eigen::VectorXd s;
};
EdgeQuadPoints map_to_edge(const QuadratureRule& rule, const Mesh& mesh, int edge);

/// Rule pair used by assembly and by error integration.
struct RulePair {
  QuadratureRule tri;
  QuadratureRule edge;
};

/// Assembly-grade rules: triangle exactness 2k+4, k+3 Gauss points per edge.
RulePair assembly_rules(int k);

/// Error-norm-grade rules: triangle exactness 2k+8, k+5 Gauss points per edge.
RulePair error_rules(int k);

}  // namespace wgs
