#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "wgs/dof_map.hpp"
#include "wgs/mesh.hpp"
#include "wgs/projections.hpp"
#include "wgs/weak_function.hpp"

namespace wgs {

/// Problem data needed by assembly: volumetric force and Dirichlet boundary
/// velocity.
struct StokesData {
  std::array<ScalarFn, 2> f;
  std::array<ScalarFn, 2> g;
};

struct SolverOptions {
  double tolerance = 1e-10;     ///< relative algebraic residual bound
  std::string method = "auto";  ///< auto | direct | minres
  long direct_limit = 500000;   ///< auto switches to minres above this unknown count
  long max_iterations = 50000;  ///< minres budget
  bool deterministic = false;   ///< assembly and the direct path are deterministic regardless
  int threads = 0;              ///< 0 = hardware default; WG_STOKES_THREADS caps either way
};

/// Assembled saddle-point system
///     [ A   Bm^T  0 ] [u]   [F]
///     [ Bm  0     c ] [p] = [G]
///     [ 0   c^T   0 ] [l]   [0]
/// where A is the weak-Laplacian velocity block, Bm stores -(div_w v, q)_h,
/// and c is the pressure mean row. Boundary-edge trace coefficients are fixed
/// to the edge projection of g and lifted into the right-hand side. The full
/// matrix is exactly symmetric.
struct SaddleSystem {
  int k = 0;
  DofMap dofs;
  Eigen::SparseMatrix<double> matrix;
  Eigen::VectorXd rhs;
  WeakFunctionVector boundary_values;  ///< velocity with boundary traces filled, rest zero
  SolverOptions options;
};

SaddleSystem assemble(const Mesh& mesh, int k, const StokesData& data,
                      const SolverOptions& options = {});

struct SolverDiagnostics {
  std::string method;
  int unknowns = 0;
  long nonzeros = 0;
  long iterations = 0;  ///< 0 for the direct path
  double residual = 0.0;
};

struct Solution {
  WeakFunctionVector velocity;  ///< boundary traces hold the lifted data
  PressureVector pressure;
  double multiplier = 0.0;
  SolverDiagnostics diag;
};

/// Thrown when the linear solve cannot meet the residual contract.
struct SolveError : std::runtime_error {
  SolveError(const std::string& what, double residual)
      : std::runtime_error(what), achieved_residual(residual) {}
  double achieved_residual;
};

/// Solves the assembled system with a relative residual <= options.tolerance.
/// Direct sparse factorization up to options.direct_limit unknowns, MINRES
/// beyond; throws SolveError on breakdown or unmet tolerance.
Solution solve(const SaddleSystem& system, const Mesh& mesh);

/// Writes the matrix in "row col value" coordinate format to `path` and the
/// right-hand side (one value per line) to `path` + ".rhs".
void dump_system(const SaddleSystem& system, const std::string& path);

}  // namespace wgs
