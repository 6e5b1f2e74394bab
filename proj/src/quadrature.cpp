#include "wgs/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wgs {

namespace {

/// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on the
/// three-term recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
      }
      // p0 = P_n(z); derivative from the standard identity
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

}  // namespace

QuadratureRule edge_quadrature(int points) {
  if (points < 1 || points > 16)
    throw std::invalid_argument("edge_quadrature: points must be in [1,16]");
  std::vector<double> x, w;
  gauss_legendre(points, x, w);
  QuadratureRule rule;
  rule.points.resize(points, 2);
  rule.weights.resize(points);
  for (int i = 0; i < points; ++i) {
    rule.points(i, 0) = 0.5 * (x[i] + 1.0);  // map [-1,1] -> [0,1]
    rule.points(i, 1) = 0.0;
    rule.weights(i) = 0.5 * w[i];
  }
  rule.exactness = 2 * points - 1;
  return rule;
}

QuadratureRule tri_quadrature(int exactness) {
  if (exactness < 1 || exactness > 20)
    throw std::invalid_argument("tri_quadrature: exactness must be in [1,20]");

  // Conical product on the square (a,b) in [0,1]^2 mapped by
  // (x,y) = (a, b*(1-a)) with Jacobian (1-a). The Jacobian raises the
  // a-degree by one, hence one extra point in that direction.
  const int na = (exactness + 3) / 2;  // ceil((exactness+1+1)/2)
  const int nb = (exactness + 2) / 2;  // ceil((exactness+1)/2)
  std::vector<double> xa, wa, xb, wb;
  gauss_legendre(na, xa, wa);
  gauss_legendre(nb, xb, wb);

  std::vector<double> px, py, pw;
  for (int i = 0; i < na; ++i) {
    const double a = 0.5 * (xa[i] + 1.0);
    for (int j = 0; j < nb; ++j) {
      const double b = 0.5 * (xb[j] + 1.0);
      px.push_back(a);
      py.push_back(b * (1.0 - a));
      pw.push_back(0.25 * wa[i] * wb[j] * (1.0 - a));
    }
  }

  // Average over the six barycentric permutations so the rule commutes with
  // the triangle symmetries; weights stay positive and exactness is kept.
  const int base = static_cast<int>(pw.size());
  QuadratureRule rule;
  rule.points.resize(6 * base, 2);
  rule.weights.resize(6 * base);
  int row = 0;
  for (int i = 0; i < base; ++i) {
    const double l1 = 1.0 - px[i] - py[i], l2 = px[i], l3 = py[i];
    const double perms[6][3] = {{l1, l2, l3}, {l1, l3, l2}, {l2, l1, l3},
                                {l2, l3, l1}, {l3, l1, l2}, {l3, l2, l1}};
    for (const auto& p : perms) {
      rule.points(row, 0) = p[1];  // x = second barycentric coordinate
      rule.points(row, 1) = p[2];  // y = third
      rule.weights(row) = pw[i] / 6.0;
      ++row;
    }
  }
  rule.exactness = exactness;
  return rule;
}

TriQuadPoints map_to_triangle(const QuadratureRule& rule, const Mesh& mesh, int tri) {
  const auto& tv = mesh.triangles[tri];
  const Vec2 a = mesh.vertices[tv[0]], b = mesh.vertices[tv[1]], c = mesh.vertices[tv[2]];
  TriQuadPoints out;
  out.x.resize(rule.size());
  out.w.resize(rule.size());
  const double jac = 2.0 * mesh.tri_area[tri];
  for (int q = 0; q < rule.size(); ++q) {
    out.x[q] = a + rule.points(q, 0) * (b - a) + rule.points(q, 1) * (c - a);
    out.w(q) = jac * rule.weights(q);
  }
  return out;
}

EdgeQuadPoints map_to_edge(const QuadratureRule& rule, const Mesh& mesh, int edge) {
  const Vec2 pa = mesh.vertices[mesh.edges[edge].a];
  const Vec2 pb = mesh.vertices[mesh.edges[edge].b];
  EdgeQuadPoints out;
  out.x.resize(rule.size());
  out.w.resize(rule.size());
  out.s.resize(rule.size());
  for (int q = 0; q < rule.size(); ++q) {
    const double s = rule.points(q, 0);
    out.s(q) = s;
    out.x[q] = pa + s * (pb - pa);
    out.w(q) = mesh.edge_length[edge] * rule.weights(q);
  }
  return out;
}

RulePair assembly_rules(int k) {
  return RulePair{tri_quadrature(2 * k + 4), edge_quadrature(k + 3)};
}

RulePair error_rules(int k) {
  return RulePair{tri_quadrature(2 * k + 8), edge_quadrature(k + 5)};
}

}  // namespace wgs
