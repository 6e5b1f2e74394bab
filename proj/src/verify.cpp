#include "wgs/verify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "wgs/element_ops.hpp"
#include "wgs/infsup.hpp"
#include "wgs/mesh.hpp"
#include "wgs/norms.hpp"
#include "wgs/problem.hpp"
#include "wgs/projections.hpp"
#include "wgs/system.hpp"

namespace wgs {

namespace {

/// High-exactness rules for property checks on coarse meshes: quadrature error
/// has to sit far below the asserted tolerances.
RulePair verify_rules() { return RulePair{tri_quadrature(14), edge_quadrature(10)}; }

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

/// Smooth scalar field with analytic partial derivatives: a random
/// trigonometric wave plus a random cubic polynomial.
struct SmoothField {
  ScalarFn value;
  ScalarFn dx;
  ScalarFn dy;
};

SmoothField random_smooth_field(std::mt19937& rng) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> freq(1.0, 3.0);
  const double a = amp(rng), b = freq(rng), c = freq(rng), d = amp(rng);
  const double e = amp(rng), f = amp(rng), g = amp(rng), h = amp(rng);
  SmoothField u;
  u.value = [=](const Vec2& p) {
    const double x = p.x(), y = p.y();
    return a * std::sin(b * x + c * y + d) + e * x * x * y + f * x * y * y + g * x * x + h * y;
  };
  u.dx = [=](const Vec2& p) {
    const double x = p.x(), y = p.y();
    return a * b * std::cos(b * x + c * y + d) + 2.0 * e * x * y + f * y * y + 2.0 * g * x;
  };
  u.dy = [=](const Vec2& p) {
    const double x = p.x(), y = p.y();
    return a * c * std::cos(b * x + c * y + d) + e * x * x + 2.0 * f * x * y + h;
  };
  return u;
}

VerifyCheck check_gradient_kernel() {
  VerifyCheck check;
  check.name = "weak-gradient kernel = constants";
  // roundoff through the local Gram solve on an operator of norm ~10
  check.threshold = 1e-11;
  const Mesh mesh = build_structured(2);
  const RulePair vr = verify_rules();
  double worst = 0.0;
  bool kernel_ok = true;
  int kernel_dim = -1;
  for (int k = 0; k <= 1; ++k) {
    for (int t = 0; t < 2; ++t) {
      const ElementOperators ops(mesh, t, k, vr.tri, vr.edge);
      const Eigen::MatrixXd& G = ops.weak_gradient();
      // the constant 1 in local DOFs: both the monomial and the Legendre
      // bases lead with the constant function
      Eigen::VectorXd constant = Eigen::VectorXd::Zero(ops.scalar_local_dim());
      constant(0) = 1.0;
      for (int l = 0; l < 3; ++l) constant(ops.interior_dim() + l * ops.trace_dim()) = 1.0;
      worst = std::max(worst, (G * constant).cwiseAbs().maxCoeff());
      const Eigen::JacobiSVD<Eigen::MatrixXd> svd(G);
      const Eigen::VectorXd sv = svd.singularValues();
      int rank = 0;
      for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-10 * sv(0)) ++rank;
      kernel_dim = ops.scalar_local_dim() - rank;
      kernel_ok = kernel_ok && (kernel_dim == 1);
    }
  }
  check.value = worst;
  check.passed = (worst <= check.threshold) && kernel_ok;
  check.detail = "constants map to zero; null space dimension " + std::to_string(kernel_dim) +
                 " per scalar component";
  return check;
}

VerifyCheck check_divergence_bound(std::mt19937& rng) {
  VerifyCheck check;
  check.name = "weak divergence bounded by sqrt(2) weak gradient";
  check.threshold = 1e-12;
  const Mesh mesh = build_structured(2);
  std::normal_distribution<double> normal;
  double min_slack = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 1; ++k) {
    const RulePair rules = assembly_rules(k);
    for (int t = 0; t < 2; ++t) {
      const ElementOperators ops(mesh, t, k, rules.tri, rules.edge);
      const int nloc = ops.scalar_local_dim();
      const int ng = ops.grad_dim();
      const Eigen::MatrixXd& M = ops.grad_mass();
      for (int rep = 0; rep < 1000; ++rep) {
        Eigen::VectorXd v(2 * nloc);
        for (int i = 0; i < v.size(); ++i) v(i) = normal(rng);
        const Eigen::VectorXd d = ops.apply_weak_divergence(v);
        double grad_sq = 0.0;
        for (int c = 0; c < 2; ++c) {
          const Eigen::VectorXd gw = ops.apply_weak_gradient(v.segment(c * nloc, nloc));
          grad_sq += gw.head(ng).dot(M * gw.head(ng)) + gw.tail(ng).dot(M * gw.tail(ng));
        }
        const double slack = std::sqrt(2.0 * grad_sq) - std::sqrt(d.dot(M * d));
        min_slack = std::min(min_slack, slack);
      }
    }
  }
  check.value = std::max(0.0, -min_slack);
  check.passed = check.value <= check.threshold;
  check.detail = "worst slack " + num(min_slack) + " over 4000 random weak functions";
  return check;
}

VerifyCheck check_commuting_gradient(std::mt19937& rng) {
  VerifyCheck check;
  check.name = "weak gradient of projection = projected gradient";
  check.threshold = 1e-10;
  const Mesh mesh = build_structured(2);
  const RulePair vr = verify_rules();
  double worst = 0.0;
  for (int k = 0; k <= 1; ++k) {
    for (int rep = 0; rep < 5; ++rep) {
      const SmoothField u = random_smooth_field(rng);
      const WeakFunctionVector qh = project_Qh({u.value}, mesh, k, vr);
      double err_sq = 0.0;
      for (int t = 0; t < mesh.num_triangles(); ++t) {
        const ElementOperators ops(mesh, t, k, vr.tri, vr.edge);
        const int ng = ops.grad_dim();
        const Eigen::VectorXd gw =
            ops.apply_weak_gradient(gather_scalar_local(qh, mesh, t, 0));
        const Eigen::VectorXd ex = gw.head(ng) - project_interior(u.dx, mesh, t, k + 1, vr.tri);
        const Eigen::VectorXd ey = gw.tail(ng) - project_interior(u.dy, mesh, t, k + 1, vr.tri);
        err_sq += ex.dot(ops.grad_mass() * ex) + ey.dot(ops.grad_mass() * ey);
      }
      worst = std::max(worst, std::sqrt(err_sq));
    }
  }
  check.value = worst;
  check.passed = worst <= check.threshold;
  check.detail = "L2 defect over 10 random smooth fields, k=0 and k=1";
  return check;
}

VerifyCheck check_commuting_divergence(std::mt19937& rng) {
  VerifyCheck check;
  check.name = "weak divergence of projection = projected divergence";
  check.threshold = 1e-10;
  const Mesh mesh = build_structured(2);
  const RulePair vr = verify_rules();
  double worst = 0.0;
  for (int k = 0; k <= 1; ++k) {
    for (int rep = 0; rep < 5; ++rep) {
      const SmoothField u1 = random_smooth_field(rng);
      const SmoothField u2 = random_smooth_field(rng);
      const ScalarFn div_u = [&](const Vec2& p) { return u1.dx(p) + u2.dy(p); };
      const WeakFunctionVector qh = project_Qh({u1.value, u2.value}, mesh, k, vr);
      double err_sq = 0.0;
      for (int t = 0; t < mesh.num_triangles(); ++t) {
        const ElementOperators ops(mesh, t, k, vr.tri, vr.edge);
        const Eigen::VectorXd dv = ops.apply_weak_divergence(gather_local(qh, mesh, t));
        const Eigen::VectorXd diff = dv - project_interior(div_u, mesh, t, k + 1, vr.tri);
        err_sq += diff.dot(ops.grad_mass() * diff);
      }
      worst = std::max(worst, std::sqrt(err_sq));
    }
  }
  check.value = worst;
  check.passed = worst <= check.threshold;
  check.detail = "L2 defect over 5 random smooth vector fields per k";
  return check;
}

VectorFn random_polynomial_field(int degree, std::mt19937& rng) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::vector<std::array<double, 3>> terms;  // coefficient per (a, b) monomial and component
  std::vector<std::array<int, 2>> exps;
  for (int d = 0; d <= degree; ++d)
    for (int a = d; a >= 0; --a) {
      exps.push_back({a, d - a});
      terms.push_back({amp(rng), amp(rng)});
    }
  return [terms, exps](const Vec2& p) {
    Vec2 out(0.0, 0.0);
    for (size_t i = 0; i < exps.size(); ++i) {
      const double m = std::pow(p.x(), exps[i][0]) * std::pow(p.y(), exps[i][1]);
      out.x() += terms[i][0] * m;
      out.y() += terms[i][1] * m;
    }
    return out;
  };
}

VerifyCheck check_pi_reproduction(std::mt19937& rng) {
  VerifyCheck check;
  check.name = "normal-moment projection reproduces matching polynomials";
  check.threshold = 1e-11;
  const Mesh mesh = build_structured(2);
  const RulePair vr = verify_rules();
  double worst = 0.0;
  for (int k = 0; k <= 1; ++k) {
    for (int rep = 0; rep < 3; ++rep) {
      const VectorFn u = random_polynomial_field(k + 1, rng);
      const PiProjection pi = project_pi(u, mesh, k, vr);
      for (int t = 0; t < mesh.num_triangles(); ++t) {
        const TriQuadPoints qp = map_to_triangle(vr.tri, mesh, t);
        for (int q = 0; q < qp.w.size(); ++q) {
          const Vec2 diff = u(qp.x[q]) - pi.evaluate(mesh, t, qp.x[q]);
          worst = std::max(worst, diff.cwiseAbs().maxCoeff());
        }
      }
    }
  }
  check.value = worst;
  check.passed = worst <= check.threshold;
  check.detail = "pointwise defect for random degree-(k+1) fields, k=0 and k=1";
  return check;
}

VerifyCheck check_pi_divergence_moments(std::mt19937& rng) {
  VerifyCheck check;
  check.name = "normal-moment projection keeps divergence moments";
  check.threshold = 1e-11;
  const Mesh mesh = build_structured(2);
  const RulePair vr = verify_rules();
  double worst = 0.0;
  for (int k = 0; k <= 1; ++k) {
    const SmoothField u1 = random_smooth_field(rng);
    const SmoothField u2 = random_smooth_field(rng);
    const VectorFn u = [&](const Vec2& p) { return Vec2(u1.value(p), u2.value(p)); };
    const ScalarFn div_u = [&](const Vec2& p) { return u1.dx(p) + u2.dy(p); };
    const PiProjection pi = project_pi(u, mesh, k, vr);
    for (int t = 0; t < mesh.num_triangles(); ++t) {
      const TriBasis pressure_basis(mesh, t, k);
      Eigen::VectorXd moments = Eigen::VectorXd::Zero(pressure_basis.dim());
      const TriQuadPoints qp = map_to_triangle(vr.tri, mesh, t);
      for (int q = 0; q < qp.w.size(); ++q) {
        const double defect = div_u(qp.x[q]) - pi.divergence(mesh, t, qp.x[q]);
        moments.noalias() += qp.w(q) * defect * pressure_basis.values(qp.x[q]);
      }
      worst = std::max(worst, moments.cwiseAbs().maxCoeff());
    }
  }
  check.value = worst;
  check.passed = worst <= check.threshold;
  check.detail = "divergence defect tested against every element pressure mode";
  return check;
}

VerifyCheck check_solve_consistency() {
  VerifyCheck check;
  check.name = "solver reproduces discrete-exact linear flow";
  check.threshold = 1e-9;
  const Mesh mesh = build_structured(2);
  const RulePair vr = verify_rules();
  // u=(y,x) is divergence free with constant gradient; p=0, f=0: the discrete
  // solution must coincide with the projected field up to solver tolerance
  const ScalarFn u1 = [](const Vec2& p) { return p.y(); };
  const ScalarFn u2 = [](const Vec2& p) { return p.x(); };
  const ScalarFn zero = [](const Vec2&) { return 0.0; };
  double worst = 0.0;
  for (int k = 0; k <= 1; ++k) {
    const StokesData data{{zero, zero}, {u1, u2}};
    const Solution sol = solve(assemble(mesh, k, data), mesh);
    const WeakFunctionVector qh = project_Qh({u1, u2}, mesh, k, vr);
    worst = std::max(worst, (sol.velocity.interior - qh.interior).cwiseAbs().maxCoeff());
    worst = std::max(worst, (sol.velocity.trace - qh.trace).cwiseAbs().maxCoeff());
    worst = std::max(worst, pressure_l2_norm(sol.pressure, mesh));
  }
  check.value = worst;
  check.passed = worst <= check.threshold;
  check.detail = "coefficient defect against the projected exact field, k=0 and k=1";
  return check;
}

VerifyCheck check_pressure_mean() {
  VerifyCheck check;
  check.name = "solved pressure has zero mean";
  check.threshold = 1e-10;
  const Mesh mesh = build_structured(4);
  const ProblemCase problem = registry_paper_case();
  const Solution sol = solve(assemble(mesh, 0, problem.data()), mesh);
  double mean = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t)
    mean += mesh.tri_area[t] * sol.pressure.element_coeffs(t)(0);  // psi_0 == 1
  check.value = std::abs(mean);
  check.passed = check.value <= check.threshold;
  check.detail = "domain integral of the k=0 pressure on the 4x4 grid";
  return check;
}

VerifyCheck check_divergence_moments_after_solve() {
  VerifyCheck check;
  check.name = "solved velocity is discretely divergence free";
  check.threshold = 1e-8;
  const Mesh mesh = build_structured(4);
  const ProblemCase problem = registry_paper_case();
  double worst = 0.0;
  for (int k = 0; k <= 1; ++k) {
    const Solution sol = solve(assemble(mesh, k, problem.data()), mesh);
    worst = std::max(worst, max_divergence_moment(sol, mesh, k));
  }
  check.value = worst;
  check.passed = worst <= check.threshold;
  check.detail = "max divergence moment after solving on the 4x4 grid, k=0 and k=1";
  return check;
}

VerifyCheck check_symmetry_and_definiteness() {
  VerifyCheck check;
  check.name = "assembled matrix exactly symmetric, velocity block definite";
  check.threshold = 0.0;
  const Mesh mesh = build_structured(2);
  const ProblemCase problem = registry_paper_case();
  const SaddleSystem sys = assemble(mesh, 0, problem.data());
  const Eigen::SparseMatrix<double> diff =
      Eigen::SparseMatrix<double>(sys.matrix.transpose()) - sys.matrix;
  double asym = 0.0;
  for (int c = 0; c < diff.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(diff, c); it; ++it)
      asym = std::max(asym, std::abs(it.value()));
  const int nv = sys.dofs.velocity_unknowns();
  const Eigen::MatrixXd A = Eigen::MatrixXd(sys.matrix).topLeftCorner(nv, nv);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  const double lambda_min = es.eigenvalues()(0);
  check.value = asym;
  check.passed = (asym == 0.0) && (lambda_min > 0.0);
  check.detail = "max |S - S^T| = " + num(asym) +
                 ", smallest velocity-block eigenvalue = " + num(lambda_min);
  return check;
}

/// Dense Gram matrices of the homogeneous scalar weak space on one mesh:
/// stiffness (weak-gradient norm), interior mass, and the discrete H1 norm.
struct ScalarPencils {
  Eigen::MatrixXd stiffness;
  Eigen::MatrixXd interior_mass;
  Eigen::MatrixXd h1_gram;
};

ScalarPencils build_scalar_pencils(const Mesh& mesh, int k) {
  const RulePair ar = assembly_rules(k);
  const RulePair er = error_rules(k);
  const int ni = tri_basis_dim(k);
  const int nt = k + 2;

  std::vector<int> slot(mesh.num_edges(), -1);
  int interior_edges = 0;
  for (int e = 0; e < mesh.num_edges(); ++e)
    if (!mesh.edges[e].boundary) slot[e] = interior_edges++;
  const int interior_count = mesh.num_triangles() * ni;
  const int total = interior_count + interior_edges * nt;

  ScalarPencils p;
  p.stiffness = Eigen::MatrixXd::Zero(total, total);
  p.interior_mass = Eigen::MatrixXd::Zero(total, total);
  p.h1_gram = Eigen::MatrixXd::Zero(total, total);

  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const ElementOperators ops(mesh, t, k, ar.tri, ar.edge);
    const int nloc = ops.scalar_local_dim();
    std::vector<int> glob(nloc, -1);
    for (int m = 0; m < ni; ++m) glob[m] = t * ni + m;
    for (int l = 0; l < 3; ++l) {
      const int e = mesh.tri_edges[t][l];
      if (slot[e] < 0) continue;
      for (int q = 0; q < nt; ++q)
        glob[ni + l * nt + q] = interior_count + slot[e] * nt + q;
    }

    // local H1 Gram: interior gradient energy plus scaled trace jumps
    Eigen::MatrixXd Nl = Eigen::MatrixXd::Zero(nloc, nloc);
    const TriBasis& basis = ops.interior_basis();
    const TriQuadPoints qp = map_to_triangle(er.tri, mesh, t);
    for (int q = 0; q < qp.w.size(); ++q) {
      const Eigen::Matrix<double, Eigen::Dynamic, 2> dphi = basis.gradients(qp.x[q]);
      Nl.topLeftCorner(ni, ni).noalias() +=
          qp.w(q) * (dphi.col(0) * dphi.col(0).transpose() + dphi.col(1) * dphi.col(1).transpose());
    }
    for (int l = 0; l < 3; ++l) {
      const int e = mesh.tri_edges[t][l];
      const EdgeBasis eb(mesh, e, k + 1);
      const EdgeQuadPoints ep = map_to_edge(er.edge, mesh, e);
      for (int q = 0; q < ep.w.size(); ++q) {
        Eigen::VectorXd r = Eigen::VectorXd::Zero(nloc);
        r.head(ni) = basis.values(ep.x[q]);
        r.segment(ni + l * nt, nt) = -eb.values(ep.s(q));
        Nl.noalias() += (ep.w(q) / mesh.tri_diameter[t]) * r * r.transpose();
      }
    }

    const Eigen::MatrixXd& S = ops.stiffness();
    const Eigen::MatrixXd& M = ops.interior_mass();
    for (int i = 0; i < nloc; ++i) {
      if (glob[i] < 0) continue;
      for (int j = 0; j < nloc; ++j) {
        if (glob[j] < 0) continue;
        p.stiffness(glob[i], glob[j]) += S(i, j);
        p.h1_gram(glob[i], glob[j]) += Nl(i, j);
        if (i < ni && j < ni) p.interior_mass(glob[i], glob[j]) += M(i, j);
      }
    }
  }
  return p;
}

VerifyCheck check_embedding_monitor() {
  VerifyCheck check;
  check.name = "interior L2 norm controlled by weak-gradient norm";
  std::vector<double> constants;
  for (int n : {2, 4, 8}) {
    const ScalarPencils p = build_scalar_pencils(build_structured(n), 0);
    const Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(p.interior_mass,
                                                                        p.stiffness);
    constants.push_back(std::sqrt(ges.eigenvalues().maxCoeff()));
  }
  check.value = constants[2];
  check.threshold = 1.10 * std::max(constants[0], constants[1]);
  check.passed = std::isfinite(constants[2]) && constants[2] <= check.threshold;
  check.detail = "extremal ratio at n=2,4,8: " + num(constants[0]) + ", " + num(constants[1]) +
                 ", " + num(constants[2]) + " (no growth under refinement)";
  return check;
}

VerifyCheck check_equivalence_monitor() {
  VerifyCheck check;
  check.name = "weak-gradient norm equivalent to discrete H1 norm";
  std::vector<double> lo, hi;
  for (int n : {2, 4, 8}) {
    const ScalarPencils p = build_scalar_pencils(build_structured(n), 0);
    const Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(p.stiffness, p.h1_gram);
    lo.push_back(std::sqrt(std::max(ges.eigenvalues().minCoeff(), 0.0)));
    hi.push_back(std::sqrt(ges.eigenvalues().maxCoeff()));
  }
  check.value = lo[2];
  check.threshold = 0.90 * std::min(lo[0], lo[1]);
  const bool lower_stable = lo[2] > 0.0 && lo[2] >= check.threshold;
  const bool upper_stable = hi[2] <= 1.10 * std::max(hi[0], hi[1]);
  check.passed = lower_stable && upper_stable;
  check.detail = "equivalence interval at n=2,4,8: [" + num(lo[0]) + ", " + num(hi[0]) + "] [" +
                 num(lo[1]) + ", " + num(hi[1]) + "] [" + num(lo[2]) + ", " + num(hi[2]) + "]";
  return check;
}

VerifyCheck check_infsup_scan(int k) {
  VerifyCheck check;
  check.name = "inf-sup constant positive and stable (k=" + std::to_string(k) + ")";
  const double beta4 = estimate_infsup(build_structured(4), k);
  const double beta8 = estimate_infsup(build_structured(8), k);
  check.value = beta8;
  check.threshold = 0.5 * beta4;
  check.passed = beta4 > 0.0 && beta8 > 0.0 && std::abs(beta8 - beta4) <= 0.5 * beta4;
  check.detail = "beta(n=4) = " + num(beta4) + ", beta(n=8) = " + num(beta8);
  return check;
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const auto& check : checks)
    if (!check.passed) return false;
  return true;
}

VerifyReport run_verify(unsigned seed) {
  std::mt19937 rng(seed);
  VerifyReport report;
  report.checks.push_back(check_gradient_kernel());
  report.checks.push_back(check_divergence_bound(rng));
  report.checks.push_back(check_commuting_gradient(rng));
  report.checks.push_back(check_commuting_divergence(rng));
  report.checks.push_back(check_pi_reproduction(rng));
  report.checks.push_back(check_pi_divergence_moments(rng));
  report.checks.push_back(check_symmetry_and_definiteness());
  report.checks.push_back(check_solve_consistency());
  report.checks.push_back(check_pressure_mean());
  report.checks.push_back(check_divergence_moments_after_solve());
  report.checks.push_back(check_embedding_monitor());
  report.checks.push_back(check_equivalence_monitor());
  report.checks.push_back(check_infsup_scan(0));
  report.checks.push_back(check_infsup_scan(1));
  return report;
}

std::string format_verify(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& check : report.checks) {
    out << (check.passed ? "PASS" : "FAIL") << "  " << check.name << "  value=" << num(check.value)
        << " bound=" << num(check.threshold);
    if (!check.detail.empty()) out << "  (" << check.detail << ")";
    out << "\n";
  }
  out << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return out.str();
}

}  // namespace wgs
