#include "wgs/system.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <vector>

#include <Eigen/SparseLU>
#include <unsupported/Eigen/IterativeSolvers>

#include "wgs/element_ops.hpp"
#include "wgs/parallel.hpp"

namespace wgs {

namespace {

struct ElementContribution {
  std::vector<Eigen::Triplet<double>> triplets;
  std::vector<std::pair<int, double>> rhs;
};

void assemble_element(const Mesh& mesh, int t, int k, const DofMap& dofs,
                      const StokesData& data, const WeakFunctionVector& boundary_values,
                      const RulePair& rules, ElementContribution& out) {
  const ElementOperators ops(mesh, t, k, rules.tri, rules.edge);
  const int ni = ops.interior_dim();
  const int nt = ops.trace_dim();
  const int nloc = ops.scalar_local_dim();

  // global index per vector-local DOF; -1 marks a fixed boundary trace
  std::vector<int> glob(2 * nloc);
  std::vector<double> fixed(2 * nloc, 0.0);
  for (int c = 0; c < 2; ++c) {
    const int base = c * nloc;
    for (int m = 0; m < ni; ++m) glob[base + m] = dofs.interior_base(t, c) + m;
    for (int l = 0; l < 3; ++l) {
      const int e = mesh.tri_edges[t][l];
      const int tb = dofs.trace_base(e, c);
      for (int q = 0; q < nt; ++q) {
        const int idx = base + ni + l * nt + q;
        if (tb >= 0) {
          glob[idx] = tb + q;
        } else {
          glob[idx] = -1;
          fixed[idx] = boundary_values.trace_coeffs(e, c)(q);
        }
      }
    }
  }

  auto& triplets = out.triplets;
  auto& rhs = out.rhs;
  triplets.reserve(2 * nloc * nloc + 4 * ni * nloc + 2 * ni);

  // velocity block: the per-component stiffness on the diagonal
  const Eigen::MatrixXd& S = ops.stiffness();
  for (int c = 0; c < 2; ++c) {
    const int base = c * nloc;
    for (int i = 0; i < nloc; ++i) {
      const int gi = glob[base + i];
      if (gi < 0) continue;  // row of a fixed DOF is dropped
      for (int j = 0; j < nloc; ++j) {
        const int gj = glob[base + j];
        const double v = S(i, j);
        if (gj >= 0)
          triplets.emplace_back(gi, gj, v);
        else if (fixed[base + j] != 0.0)
          rhs.emplace_back(gi, -v * fixed[base + j]);
      }
    }
  }

  // divergence coupling Bm = -(div_w v, q)_h, scattered symmetrically
  const Eigen::MatrixXd& Dq = ops.div_coupling();
  for (int j = 0; j < ni; ++j) {
    const int pr = dofs.pressure_base(t) + j;
    for (int m = 0; m < 2 * nloc; ++m) {
      const double v = -Dq(j, m);
      const int gm = glob[m];
      if (gm >= 0) {
        triplets.emplace_back(pr, gm, v);
        triplets.emplace_back(gm, pr, v);
      } else if (fixed[m] != 0.0) {
        rhs.emplace_back(pr, -v * fixed[m]);
      }
    }
  }

  // pressure mean row: psi_0 is identically one, so column 0 of the interior
  // Gram matrix holds the element integrals of the pressure basis
  const Eigen::VectorXd cvec = ops.interior_mass().col(0);
  for (int j = 0; j < ni; ++j) {
    const int pr = dofs.pressure_base(t) + j;
    triplets.emplace_back(pr, dofs.multiplier_index, cvec(j));
    triplets.emplace_back(dofs.multiplier_index, pr, cvec(j));
  }

  // load: (f, v0)_K against the interior basis
  const TriQuadPoints qp = map_to_triangle(rules.tri, mesh, t);
  Eigen::MatrixXd F = Eigen::MatrixXd::Zero(ni, 2);
  for (int q = 0; q < qp.w.size(); ++q) {
    const Eigen::VectorXd psi = ops.interior_basis().values(qp.x[q]);
    F.col(0).noalias() += qp.w(q) * data.f[0](qp.x[q]) * psi;
    F.col(1).noalias() += qp.w(q) * data.f[1](qp.x[q]) * psi;
  }
  for (int c = 0; c < 2; ++c)
    for (int m = 0; m < ni; ++m) rhs.emplace_back(dofs.interior_base(t, c) + m, F(m, c));
}

}  // namespace

SaddleSystem assemble(const Mesh& mesh, int k, const StokesData& data,
                      const SolverOptions& options) {
  SaddleSystem sys;
  sys.k = k;
  sys.dofs = build_dof_map(mesh, k);
  sys.options = options;

  const RulePair rules = assembly_rules(k);

  sys.boundary_values = WeakFunctionVector::zero(mesh, k, 2);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (!mesh.edges[e].boundary) continue;
    for (int c = 0; c < 2; ++c)
      sys.boundary_values.trace_coeffs(e, c) = project_edge(data.g[c], mesh, e, k + 1, rules.edge);
  }

  const int nt = mesh.num_triangles();
  std::vector<ElementContribution> contribs(nt);
  parallel_for(nt, resolve_threads(options.threads), [&](int begin, int end) {
    for (int t = begin; t < end; ++t)
      assemble_element(mesh, t, k, sys.dofs, data, sys.boundary_values, rules, contribs[t]);
  });

  // serial merge in element order keeps the result thread-count independent
  size_t total = 0;
  for (const auto& c : contribs) total += c.triplets.size();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(total);
  sys.rhs = Eigen::VectorXd::Zero(sys.dofs.total);
  for (const auto& c : contribs) {
    triplets.insert(triplets.end(), c.triplets.begin(), c.triplets.end());
    for (const auto& [idx, val] : c.rhs) sys.rhs(idx) += val;
  }

  sys.matrix.resize(sys.dofs.total, sys.dofs.total);
  sys.matrix.setFromTriplets(triplets.begin(), triplets.end());

  // exact symmetry: every off-diagonal pair was inserted with identical values
  // in matching order, and averaging with the transpose pins the invariant
  Eigen::SparseMatrix<double> transposed = sys.matrix.transpose();
  sys.matrix = 0.5 * (sys.matrix + transposed);
  sys.matrix.makeCompressed();
  return sys;
}

Solution solve(const SaddleSystem& system, const Mesh& mesh) {
  const DofMap& dofs = system.dofs;
  const int n = dofs.total;
  const double bnorm = system.rhs.norm();

  std::string method = system.options.method;
  if (method == "auto")
    method = (n <= system.options.direct_limit) ? "direct" : "minres";

  Eigen::VectorXd x;
  long iterations = 0;
  if (method == "direct") {
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(system.matrix);
    if (lu.info() != Eigen::Success)
      throw SolveError("direct factorization failed", std::numeric_limits<double>::infinity());
    x = lu.solve(system.rhs);
  } else if (method == "minres") {
    Eigen::MINRES<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                  Eigen::IdentityPreconditioner>
        minres;
    minres.setTolerance(0.1 * system.options.tolerance);
    minres.setMaxIterations(system.options.max_iterations);
    minres.compute(system.matrix);
    x = minres.solve(system.rhs);
    iterations = minres.iterations();
  } else {
    throw std::invalid_argument("solve: unknown method '" + method + "'");
  }

  const double residual = (system.matrix * x - system.rhs).norm() / (bnorm > 0.0 ? bnorm : 1.0);
  if (!(residual <= system.options.tolerance))
    throw SolveError("linear solve missed the residual tolerance (" + method + ")", residual);

  Solution sol;
  sol.velocity = WeakFunctionVector::zero(mesh, system.k, 2);
  const int ni = dofs.interior_dim();
  const int td = dofs.trace_dim();
  for (int t = 0; t < dofs.n_tri; ++t)
    for (int c = 0; c < 2; ++c)
      sol.velocity.interior_coeffs(t, c) = x.segment(dofs.interior_base(t, c), ni);
  for (int e = 0; e < dofs.n_edge; ++e) {
    for (int c = 0; c < 2; ++c) {
      const int tb = dofs.trace_base(e, c);
      if (tb >= 0)
        sol.velocity.trace_coeffs(e, c) = x.segment(tb, td);
      else
        sol.velocity.trace_coeffs(e, c) = system.boundary_values.trace_coeffs(e, c);
    }
  }
  sol.pressure = PressureVector::zero(mesh, system.k);
  sol.pressure.coeffs = x.segment(dofs.pressure_offset, dofs.n_tri * ni);
  sol.pressure.mean_zero = true;
  sol.multiplier = x(dofs.multiplier_index);

  sol.diag.method = method;
  sol.diag.unknowns = n;
  sol.diag.nonzeros = system.matrix.nonZeros();
  sol.diag.iterations = iterations;
  sol.diag.residual = residual;
  return sol;
}

void dump_system(const SaddleSystem& system, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("dump_system: cannot open " + path);
  char line[96];
  for (int col = 0; col < system.matrix.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(system.matrix, col); it; ++it) {
      std::snprintf(line, sizeof(line), "%ld %ld %.17g\n", static_cast<long>(it.row()),
                    static_cast<long>(it.col()), it.value());
      out << line;
    }
  }
  std::ofstream rhs(path + ".rhs");
  if (!rhs) throw std::runtime_error("dump_system: cannot open " + path + ".rhs");
  for (int i = 0; i < system.rhs.size(); ++i) {
    std::snprintf(line, sizeof(line), "%.17g\n", system.rhs(i));
    rhs << line;
  }
}

}  // namespace wgs
