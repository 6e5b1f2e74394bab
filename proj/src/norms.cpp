#include "wgs/norms.hpp"

#include <cmath>

#include "wgs/parallel.hpp"

namespace wgs {

namespace {

/// Evaluates fn(t) per element in parallel, then accumulates the per-element
/// values in element order so the sum is thread-count independent.
template <typename Fn>
double sum_over_elements(const Mesh& mesh, const Fn& fn) {
  const int nt = mesh.num_triangles();
  std::vector<double> partial(nt, 0.0);
  parallel_for(nt, resolve_threads(0), [&](int begin, int end) {
    for (int t = begin; t < end; ++t) partial[t] = fn(t);
  });
  double sum = 0.0;
  for (double v : partial) sum += v;
  return sum;
}

}  // namespace

double energy_error(const Solution& solution, const GradFn& grad_u, const Mesh& mesh, int k) {
  const RulePair rules = error_rules(k);
  const double sq = sum_over_elements(mesh, [&](int t) {
    const ElementOperators ops(mesh, t, k, rules.tri, rules.edge);
    const int ng = ops.grad_dim();
    Eigen::VectorXd gw[2];
    for (int c = 0; c < 2; ++c)
      gw[c] = ops.apply_weak_gradient(gather_scalar_local(solution.velocity, mesh, t, c));
    const TriQuadPoints qp = map_to_triangle(rules.tri, mesh, t);
    double acc = 0.0;
    for (int q = 0; q < qp.w.size(); ++q) {
      const Eigen::VectorXd phi = ops.grad_basis().values(qp.x[q]);
      const Eigen::Matrix2d gu = grad_u(qp.x[q]);
      for (int c = 0; c < 2; ++c) {
        const double ex = gu(c, 0) - phi.dot(gw[c].head(ng));
        const double ey = gu(c, 1) - phi.dot(gw[c].tail(ng));
        acc += qp.w(q) * (ex * ex + ey * ey);
      }
    }
    return acc;
  });
  return std::sqrt(sq);
}

double pressure_error(const Solution& solution, const ScalarFn& p, const Mesh& mesh, int k) {
  const RulePair rules = error_rules(k);
  const double sq = sum_over_elements(mesh, [&](int t) {
    const TriBasis basis(mesh, t, k);
    const auto coeffs = solution.pressure.element_coeffs(t);
    const TriQuadPoints qp = map_to_triangle(rules.tri, mesh, t);
    double acc = 0.0;
    for (int q = 0; q < qp.w.size(); ++q) {
      const double e = p(qp.x[q]) - basis.values(qp.x[q]).dot(coeffs);
      acc += qp.w(q) * e * e;
    }
    return acc;
  });
  return std::sqrt(sq);
}

double superclose_error(const Solution& solution, const std::array<ScalarFn, 2>& u,
                        const Mesh& mesh, int k) {
  const RulePair rules = error_rules(k);
  const double sq = sum_over_elements(mesh, [&](int t) {
    const TriBasis basis(mesh, t, k);
    const Eigen::MatrixXd M = local_mass_matrix(basis, mesh, t, rules.tri);
    double acc = 0.0;
    for (int c = 0; c < 2; ++c) {
      const Eigen::VectorXd diff = project_interior(u[c], mesh, t, k, rules.tri) -
                                   solution.velocity.interior_coeffs(t, c);
      acc += diff.dot(M * diff);
    }
    return acc;
  });
  return std::sqrt(sq);
}

double discrete_h1_norm(const WeakFunctionVector& v, const Mesh& mesh) {
  const RulePair rules = error_rules(v.k);
  const double sq = sum_over_elements(mesh, [&](int t) {
    const TriBasis basis(mesh, t, v.k);
    const TriQuadPoints qp = map_to_triangle(rules.tri, mesh, t);
    double acc = 0.0;
    for (int c = 0; c < v.components; ++c) {
      const auto coeffs = v.interior_coeffs(t, c);
      for (int q = 0; q < qp.w.size(); ++q) {
        const Eigen::Matrix<double, Eigen::Dynamic, 2> dphi = basis.gradients(qp.x[q]);
        const double gx = dphi.col(0).dot(coeffs);
        const double gy = dphi.col(1).dot(coeffs);
        acc += qp.w(q) * (gx * gx + gy * gy);
      }
      for (int l = 0; l < 3; ++l) {
        const int e = mesh.tri_edges[t][l];
        const EdgeBasis eb(mesh, e, v.k + 1);
        const EdgeQuadPoints ep = map_to_edge(rules.edge, mesh, e);
        const auto trace = v.trace_coeffs(e, c);
        double jump = 0.0;
        for (int q = 0; q < ep.w.size(); ++q) {
          const double d = basis.values(ep.x[q]).dot(coeffs) - eb.values(ep.s(q)).dot(trace);
          jump += ep.w(q) * d * d;
        }
        acc += jump / mesh.tri_diameter[t];
      }
    }
    return acc;
  });
  return std::sqrt(sq);
}

double weak_gradient_norm(const WeakFunctionVector& v, const Mesh& mesh) {
  const RulePair rules = assembly_rules(v.k);
  const double sq = sum_over_elements(mesh, [&](int t) {
    const ElementOperators ops(mesh, t, v.k, rules.tri, rules.edge);
    const int ng = ops.grad_dim();
    double acc = 0.0;
    for (int c = 0; c < v.components; ++c) {
      const Eigen::VectorXd gw = ops.apply_weak_gradient(gather_scalar_local(v, mesh, t, c));
      acc += gw.head(ng).dot(ops.grad_mass() * gw.head(ng));
      acc += gw.tail(ng).dot(ops.grad_mass() * gw.tail(ng));
    }
    return acc;
  });
  return std::sqrt(sq);
}

double pressure_l2_norm(const PressureVector& p, const Mesh& mesh) {
  const RulePair rules = assembly_rules(p.k);
  const double sq = sum_over_elements(mesh, [&](int t) {
    const TriBasis basis(mesh, t, p.k);
    const Eigen::MatrixXd M = local_mass_matrix(basis, mesh, t, rules.tri);
    const auto coeffs = p.element_coeffs(t);
    return coeffs.dot(M * coeffs);
  });
  return std::sqrt(sq);
}

double max_divergence_moment(const Solution& solution, const Mesh& mesh, int k) {
  const RulePair rules = assembly_rules(k);
  const int nt = mesh.num_triangles();
  std::vector<double> partial(nt, 0.0);
  parallel_for(nt, resolve_threads(0), [&](int begin, int end) {
    for (int t = begin; t < end; ++t) {
      const ElementOperators ops(mesh, t, k, rules.tri, rules.edge);
      const Eigen::VectorXd moments =
          ops.div_coupling() * gather_local(solution.velocity, mesh, t);
      partial[t] = moments.cwiseAbs().maxCoeff();
    }
  });
  double worst = 0.0;
  for (double v : partial) worst = std::max(worst, v);
  return worst;
}

double l2_norm(const ScalarFn& f, const Mesh& mesh, int exactness) {
  const QuadratureRule rule = tri_quadrature(exactness);
  const double sq = sum_over_elements(mesh, [&](int t) {
    const TriQuadPoints qp = map_to_triangle(rule, mesh, t);
    double acc = 0.0;
    for (int q = 0; q < qp.w.size(); ++q) {
      const double v = f(qp.x[q]);
      acc += qp.w(q) * v * v;
    }
    return acc;
  });
  return std::sqrt(sq);
}

double l2_norm(const std::array<ScalarFn, 2>& f, const Mesh& mesh, int exactness) {
  const double a = l2_norm(f[0], mesh, exactness);
  const double b = l2_norm(f[1], mesh, exactness);
  return std::sqrt(a * a + b * b);
}

}  // namespace wgs
