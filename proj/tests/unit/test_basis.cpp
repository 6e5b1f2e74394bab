#include <cmath>

#include "doctest.h"
#include "wgs/basis.hpp"
#include "wgs/mesh.hpp"

using namespace wgs;

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

/// Exact integral of ((x-cx)/s)^A ((y-cy)/s)^B over the reference triangle,
/// by binomial expansion into raw monomials with integral a!b!/(a+b+2)!.
double ref_scaled_monomial(int A, int B, double cx, double cy, double s) {
  double acc = 0.0;
  for (int i = 0; i <= A; ++i) {
    for (int j = 0; j <= B; ++j) {
      acc += binomial(A, i) * std::pow(-cx, A - i) * binomial(B, j) * std::pow(-cy, B - j) *
             factorial(i) * factorial(j) / factorial(i + j + 2);
    }
  }
  return acc / std::pow(s, A + B);
}

Mesh reference_mesh() {
  return from_triangles({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, {{0, 1, 2}});
}

}  // namespace

TEST_SUITE("basis") {

TEST_CASE("dimension and degree ordering") {
  CHECK(tri_basis_dim(0) == 1);
  CHECK(tri_basis_dim(1) == 3);
  CHECK(tri_basis_dim(2) == 6);
  const TriBasis basis(Vec2(0.0, 0.0), 1.0, 2);
  const auto& exps = basis.exponents();
  REQUIRE(static_cast<int>(exps.size()) == 6);
  for (size_t i = 1; i < exps.size(); ++i)
    CHECK(exps[i - 1][0] + exps[i - 1][1] <= exps[i][0] + exps[i][1]);
}

TEST_CASE("values at the center collapse to the constant") {
  const Mesh mesh = reference_mesh();
  const TriBasis basis(mesh, 0, 2);
  const Eigen::VectorXd v = basis.values(basis.center());
  CHECK(v(0) == 1.0);
  for (int i = 1; i < v.size(); ++i) CHECK(v(i) == 0.0);
}

TEST_CASE("gradients agree with central differences") {
  const Mesh mesh = build_structured(2);
  const TriBasis basis(mesh, 1, 3);
  const Vec2 x(0.31, 0.47);
  const double eps = 1e-6;
  const auto grad = basis.gradients(x);
  const Eigen::VectorXd fxp = basis.values(x + Vec2(eps, 0.0));
  const Eigen::VectorXd fxm = basis.values(x - Vec2(eps, 0.0));
  const Eigen::VectorXd fyp = basis.values(x + Vec2(0.0, eps));
  const Eigen::VectorXd fym = basis.values(x - Vec2(0.0, eps));
  for (int i = 0; i < basis.dim(); ++i) {
    CHECK(grad(i, 0) == doctest::Approx((fxp(i) - fxm(i)) / (2 * eps)).epsilon(1e-6));
    CHECK(grad(i, 1) == doctest::Approx((fyp(i) - fym(i)) / (2 * eps)).epsilon(1e-6));
  }
}

TEST_CASE("element mass matrix matches the closed-form monomial oracle") {
  const Mesh mesh = reference_mesh();
  for (int degree : {0, 1, 2}) {
    const TriBasis basis(mesh, 0, degree);
    const Eigen::MatrixXd M = local_mass_matrix(basis, mesh, 0, tri_quadrature(2 * degree + 2));
    const auto& exps = basis.exponents();
    for (int i = 0; i < basis.dim(); ++i) {
      for (int j = 0; j < basis.dim(); ++j) {
        const double exact =
            ref_scaled_monomial(exps[i][0] + exps[j][0], exps[i][1] + exps[j][1],
                                basis.center().x(), basis.center().y(), basis.scale());
        CHECK(M(i, j) == doctest::Approx(exact).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("edge Legendre basis: endpoint values and diagonal Gram") {
  const Mesh mesh = build_structured(1);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const EdgeBasis basis(mesh, e, 2);
    const Eigen::VectorXd at0 = basis.values(0.0);
    const Eigen::VectorXd at1 = basis.values(1.0);
    for (int q = 0; q < basis.dim(); ++q) {
      CHECK(at1(q) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(at0(q) == doctest::Approx(q % 2 == 0 ? 1.0 : -1.0).epsilon(1e-14));
    }
    const Eigen::MatrixXd G = local_mass_matrix(basis);
    for (int i = 0; i < basis.dim(); ++i)
      CHECK(G(i, i) == doctest::Approx(mesh.edge_length[e] / (2 * i + 1)).epsilon(1e-14));
    // numeric orthogonality through an independent Gauss rule
    const QuadratureRule rule = edge_quadrature(6);
    for (int i = 0; i < basis.dim(); ++i) {
      for (int j = 0; j < i; ++j) {
        double acc = 0.0;
        for (int q = 0; q < rule.size(); ++q) {
          const Eigen::VectorXd v = basis.values(rule.points(q, 0));
          acc += rule.weights(q) * v(i) * v(j);
        }
        CHECK(std::abs(acc) < 1e-14);
      }
    }
  }
}

TEST_CASE("cross mass matrix embeds the lower-degree Gram") {
  const Mesh mesh = build_structured(2);
  const int t = 3;
  const TriBasis p1(mesh, t, 1);
  const TriBasis p2(mesh, t, 2);
  const QuadratureRule rule = tri_quadrature(6);
  const Eigen::MatrixXd C = cross_mass_matrix(p1, p2, mesh, t, rule);
  const Eigen::MatrixXd M = local_mass_matrix(p2, mesh, t, rule);
  // same center and scale: the P1 functions are the first three P2 functions
  CHECK((C - M.topRows(3)).cwiseAbs().maxCoeff() < 1e-14);
}

}  // TEST_SUITE
