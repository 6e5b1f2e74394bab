#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "wgs/norms.hpp"
#include "wgs/projections.hpp"

using namespace wgs;

namespace {

Mesh reference_mesh() {
  return from_triangles({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, {{0, 1, 2}});
}

/// Random polynomial vector field of total degree <= deg with analytic
/// divergence, for reproduction checks.
struct PolyField {
  std::vector<std::array<int, 2>> exps;
  Eigen::VectorXd cx, cy;

  Vec2 value(const Vec2& p) const {
    Vec2 v = Vec2::Zero();
    for (size_t m = 0; m < exps.size(); ++m) {
      const double mono = std::pow(p.x(), exps[m][0]) * std::pow(p.y(), exps[m][1]);
      v.x() += cx(m) * mono;
      v.y() += cy(m) * mono;
    }
    return v;
  }
  double div(const Vec2& p) const {
    double d = 0.0;
    for (size_t m = 0; m < exps.size(); ++m) {
      const int a = exps[m][0], b = exps[m][1];
      if (a >= 1) d += cx(m) * a * std::pow(p.x(), a - 1) * std::pow(p.y(), b);
      if (b >= 1) d += cy(m) * b * std::pow(p.x(), a) * std::pow(p.y(), b - 1);
    }
    return d;
  }
};

PolyField random_field(int deg, unsigned seed) {
  PolyField f;
  for (int d = 0; d <= deg; ++d)
    for (int a = d; a >= 0; --a) f.exps.push_back({a, d - a});
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal;
  f.cx.resize(f.exps.size());
  f.cy.resize(f.exps.size());
  for (int m = 0; m < f.cx.size(); ++m) {
    f.cx(m) = normal(rng);
    f.cy(m) = normal(rng);
  }
  return f;
}

}  // namespace

TEST_SUITE("projections") {

TEST_CASE("element average of sin(x) on the reference triangle") {
  const Mesh mesh = reference_mesh();
  const QuadratureRule rule = tri_quadrature(14);
  const Eigen::VectorXd c =
      project_interior([](const Vec2& p) { return std::sin(p.x()); }, mesh, 0, 0, rule);
  // closed form: (1/|K|) int_K sin x = 2 (1 - sin 1)
  CHECK(c.size() == 1);
  CHECK(std::abs(c(0) - 2.0 * (1.0 - std::sin(1.0))) < 1e-14);
}

TEST_CASE("interior projection reproduces polynomials of the target degree") {
  const Mesh mesh = build_structured(3);
  const QuadratureRule rule = tri_quadrature(10);
  const ScalarFn u = [](const Vec2& p) {
    return 1.5 - p.x() + 2.0 * p.y() + 0.5 * p.x() * p.y() - p.y() * p.y();
  };
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const Eigen::VectorXd c = project_interior(u, mesh, t, 2, rule);
    const TriBasis basis(mesh, t, 2);
    const Vec2 probe = mesh.tri_centroid[t] + Vec2(0.031, -0.017);
    CHECK(std::abs(basis.values(probe).dot(c) - u(probe)) < 1e-13);
  }
}

TEST_CASE("edge projection of the squared arc length onto P1") {
  const Mesh mesh = reference_mesh();
  const QuadratureRule rule = edge_quadrature(6);
  // edge 0 joins vertices 0 and 1, so s = x along it; best P1 fit of s^2 is
  // s - 1/6, i.e. Legendre coefficients (1/3, 1/2)
  REQUIRE(mesh.edges[0].a == 0);
  REQUIRE(mesh.edges[0].b == 1);
  const Eigen::VectorXd c =
      project_edge([](const Vec2& p) { return p.x() * p.x(); }, mesh, 0, 1, rule);
  CHECK(std::abs(c(0) - 1.0 / 3.0) < 1e-14);
  CHECK(std::abs(c(1) - 0.5) < 1e-14);
}

TEST_CASE("edge projection reproduces traces of matching degree") {
  const Mesh mesh = build_structured(2);
  const QuadratureRule rule = edge_quadrature(8);
  const ScalarFn u = [](const Vec2& p) { return 0.3 + p.x() - 2.0 * p.y() + p.x() * p.y(); };
  for (int e = 0; e < mesh.num_edges(); ++e) {
    // u restricted to a straight edge is a quadratic in s
    const Eigen::VectorXd c = project_edge(u, mesh, e, 2, rule);
    const EdgeBasis basis(mesh, e, 2);
    const Vec2 pa = mesh.vertices[mesh.edges[e].a];
    const Vec2 pb = mesh.vertices[mesh.edges[e].b];
    for (double s : {0.0, 0.25, 0.7, 1.0}) {
      const Vec2 x = pa + s * (pb - pa);
      CHECK(std::abs(basis.values(s).dot(c) - u(x)) < 1e-13);
    }
  }
}

TEST_CASE("interpolant of a constant is the constant") {
  const Mesh mesh = build_structured(2);
  const RulePair rules = assembly_rules(0);
  const ScalarFn one = [](const Vec2&) { return 1.0; };
  const WeakFunctionVector v = project_Qh({one, one}, mesh, 0, rules);
  for (int t = 0; t < mesh.num_triangles(); ++t)
    for (int comp : {0, 1}) CHECK(std::abs(v.interior_coeffs(t, comp)(0) - 1.0) < 1e-14);
  for (int e = 0; e < mesh.num_edges(); ++e)
    for (int comp : {0, 1}) {
      CHECK(std::abs(v.trace_coeffs(e, comp)(0) - 1.0) < 1e-14);
      CHECK(std::abs(v.trace_coeffs(e, comp)(1)) < 1e-14);
    }
}

TEST_CASE("interpolant traces are single valued and reproduce smooth data") {
  const Mesh mesh = build_structured(3);
  const RulePair rules = assembly_rules(1);
  const ScalarFn ux = [](const Vec2& p) { return std::sin(p.x()) + p.y(); };
  const ScalarFn uy = [](const Vec2& p) { return p.x() * p.y(); };
  const WeakFunctionVector v = project_Qh({ux, uy}, mesh, 1, rules);
  // uy is quadratic: its edge traces (degree <= 2 in s) reproduce exactly
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const EdgeBasis basis(mesh, e, 2);
    const Vec2 pa = mesh.vertices[mesh.edges[e].a];
    const Vec2 pb = mesh.vertices[mesh.edges[e].b];
    const Vec2 x = pa + 0.4 * (pb - pa);
    CHECK(std::abs(basis.values(0.4).dot(v.trace_coeffs(e, 1)) - uy(x)) < 1e-13);
  }
}

TEST_CASE("velocity projection reproduces fields of the matching degree") {
  const Mesh mesh = build_structured(2);
  const RulePair rules = assembly_rules(1);
  for (int k : {0, 1}) {
    const PolyField f = random_field(k + 1, 42 + k);
    const VectorFn u = [&](const Vec2& p) { return f.value(p); };
    const PiProjection pi = project_pi(u, mesh, k, rules);
    for (int t = 0; t < mesh.num_triangles(); ++t) {
      const Vec2 probe = mesh.tri_centroid[t] + Vec2(-0.02, 0.013);
      const Vec2 diff = pi.evaluate(mesh, t, probe) - f.value(probe);
      CHECK(diff.cwiseAbs().maxCoeff() < 1e-11);
      CHECK(std::abs(pi.divergence(mesh, t, probe) - f.div(probe)) < 1e-10);
    }
  }
}

TEST_CASE("velocity projection preserves divergence moments") {
  const Mesh mesh = build_structured(2);
  // the identity holds as exactly as the defining moments are integrated, so
  // non-polynomial inputs need a high-order rule pair
  const RulePair rules{tri_quadrature(14), edge_quadrature(10)};
  const VectorFn u = [](const Vec2& p) {
    return Vec2(std::sin(p.x()) * std::cos(p.y()), std::exp(p.x()) + std::cos(p.y()));
  };
  const ScalarFn div_u = [](const Vec2& p) {
    return std::cos(p.x()) * std::cos(p.y()) - std::sin(p.y());
  };
  const QuadratureRule fine = tri_quadrature(14);
  for (int k : {0, 1}) {
    const PiProjection pi = project_pi(u, mesh, k, rules);
    for (int t = 0; t < mesh.num_triangles(); ++t) {
      const TriBasis pressure(mesh, t, k);
      const TriQuadPoints qp = map_to_triangle(fine, mesh, t);
      Eigen::VectorXd moments = Eigen::VectorXd::Zero(pressure.dim());
      for (size_t q = 0; q < qp.x.size(); ++q)
        moments += qp.w(q) * (pi.divergence(mesh, t, qp.x[q]) - div_u(qp.x[q])) *
                   pressure.values(qp.x[q]);
      CHECK(moments.cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("projected divergence agrees with differentiated values") {
  const Mesh mesh = build_structured(2);
  const RulePair rules = assembly_rules(1);
  const VectorFn u = [](const Vec2& p) {
    return Vec2(std::cos(p.y()) * p.x(), std::sin(p.x()) - p.y() * p.y());
  };
  const PiProjection pi = project_pi(u, mesh, 1, rules);
  const double eps = 1e-6;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const Vec2 c = mesh.tri_centroid[t];
    const double dx =
        (pi.evaluate(mesh, t, c + Vec2(eps, 0)).x() - pi.evaluate(mesh, t, c - Vec2(eps, 0)).x()) /
        (2 * eps);
    const double dy =
        (pi.evaluate(mesh, t, c + Vec2(0, eps)).y() - pi.evaluate(mesh, t, c - Vec2(0, eps)).y()) /
        (2 * eps);
    CHECK(std::abs(pi.divergence(mesh, t, c) - (dx + dy)) < 1e-6);
  }
}

TEST_CASE("velocity projection rejects unsupported orders") {
  const Mesh mesh = build_structured(1);
  const RulePair rules = assembly_rules(1);
  const VectorFn u = [](const Vec2& p) { return Vec2(p.x(), p.y()); };
  CHECK_THROWS_AS(project_pi(u, mesh, 2, rules), std::invalid_argument);
  CHECK_THROWS_AS(project_pi(u, mesh, -1, rules), std::invalid_argument);
}

}  // TEST_SUITE
