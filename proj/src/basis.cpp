#include "wgs/basis.hpp"

#include <stdexcept>

namespace wgs {

namespace {

std::vector<std::array<int, 2>> monomial_exponents(int degree) {
  std::vector<std::array<int, 2>> exps;
  exps.reserve(tri_basis_dim(degree));
  for (int d = 0; d <= degree; ++d)
    for (int a = d; a >= 0; --a) exps.push_back({a, d - a});
  return exps;
}

}  // namespace

TriBasis::TriBasis(const Mesh& mesh, int tri, int degree)
    : TriBasis(mesh.tri_centroid[tri], mesh.tri_diameter[tri], degree) {}

TriBasis::TriBasis(Vec2 center, double scale, int degree)
    : center_(center), scale_(scale), degree_(degree), exps_(monomial_exponents(degree)) {
  if (degree < 0) throw std::invalid_argument("TriBasis: degree must be >= 0");
  if (!(scale > 0.0)) throw std::invalid_argument("TriBasis: scale must be positive");
}

Eigen::VectorXd TriBasis::values(const Vec2& x) const {
  const double u = (x.x() - center_.x()) / scale_;
  const double v = (x.y() - center_.y()) / scale_;
  // powers up to degree, then read off per exponent pair
  Eigen::VectorXd pu(degree_ + 1), pv(degree_ + 1);
  pu(0) = pv(0) = 1.0;
  for (int d = 1; d <= degree_; ++d) {
    pu(d) = pu(d - 1) * u;
    pv(d) = pv(d - 1) * v;
  }
  Eigen::VectorXd out(dim());
  for (int i = 0; i < dim(); ++i) out(i) = pu(exps_[i][0]) * pv(exps_[i][1]);
  return out;
}

Eigen::Matrix<double, Eigen::Dynamic, 2> TriBasis::gradients(const Vec2& x) const {
  const double u = (x.x() - center_.x()) / scale_;
  const double v = (x.y() - center_.y()) / scale_;
  Eigen::VectorXd pu(degree_ + 1), pv(degree_ + 1);
  pu(0) = pv(0) = 1.0;
  for (int d = 1; d <= degree_; ++d) {
    pu(d) = pu(d - 1) * u;
    pv(d) = pv(d - 1) * v;
  }
  Eigen::Matrix<double, Eigen::Dynamic, 2> out(dim(), 2);
  for (int i = 0; i < dim(); ++i) {
    const int a = exps_[i][0], b = exps_[i][1];
    out(i, 0) = (a > 0 ? a * pu(a - 1) * pv(b) : 0.0) / scale_;
    out(i, 1) = (b > 0 ? b * pu(a) * pv(b - 1) : 0.0) / scale_;
  }
  return out;
}

EdgeBasis::EdgeBasis(const Mesh& mesh, int edge, int degree)
    : degree_(degree), length_(mesh.edge_length[edge]) {
  if (degree < 0) throw std::invalid_argument("EdgeBasis: degree must be >= 0");
}

Eigen::VectorXd EdgeBasis::values(double s) const {
  // Legendre recurrence in t = 2s - 1 on [-1,1]
  const double t = 2.0 * s - 1.0;
  Eigen::VectorXd out(dim());
  out(0) = 1.0;
  if (degree_ >= 1) out(1) = t;
  for (int n = 1; n < degree_; ++n)
    out(n + 1) = ((2 * n + 1) * t * out(n) - n * out(n - 1)) / (n + 1);
  return out;
}

Eigen::MatrixXd local_mass_matrix(const TriBasis& basis, const Mesh& mesh, int tri,
                                  const QuadratureRule& rule) {
  const TriQuadPoints qp = map_to_triangle(rule, mesh, tri);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(basis.dim(), basis.dim());
  for (int q = 0; q < qp.w.size(); ++q) {
    const Eigen::VectorXd phi = basis.values(qp.x[q]);
    M.noalias() += qp.w(q) * phi * phi.transpose();
  }
  return 0.5 * (M + M.transpose());
}

Eigen::MatrixXd local_mass_matrix(const EdgeBasis& basis) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(basis.dim(), basis.dim());
  for (int i = 0; i < basis.dim(); ++i) M(i, i) = basis.length() / (2 * i + 1);
  return M;
}

Eigen::MatrixXd cross_mass_matrix(const TriBasis& a, const TriBasis& b, const Mesh& mesh,
                                  int tri, const QuadratureRule& rule) {
  const TriQuadPoints qp = map_to_triangle(rule, mesh, tri);
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(a.dim(), b.dim());
  for (int q = 0; q < qp.w.size(); ++q)
    C.noalias() += qp.w(q) * a.values(qp.x[q]) * b.values(qp.x[q]).transpose();
  return C;
}

}  // namespace wgs
