#pragma once

#include "wgs/element_ops.hpp"
#include "wgs/mesh.hpp"
#include "wgs/projections.hpp"
#include "wgs/system.hpp"

namespace wgs {

/// Energy error ||grad u - grad_w u_h||_h with the error-norm quadrature.
double energy_error(const Solution& solution, const GradFn& grad_u, const Mesh& mesh, int k);

/// Pressure L2 error ||p - p_h||.
double pressure_error(const Solution& solution, const ScalarFn& p, const Mesh& mesh, int k);

/// Superclose L2 error ||P_h^k u - u_h^0|| over element interiors.
double superclose_error(const Solution& solution, const std::array<ScalarFn, 2>& u,
                        const Mesh& mesh, int k);

/// Discrete H1 norm (||grad v0||_h^2 + sum_K h_K^{-1} ||v0 - vb||^2_{dK})^{1/2};
/// components are summed for vector weak functions.
double discrete_h1_norm(const WeakFunctionVector& v, const Mesh& mesh);

/// ||grad_w v||_h of a weak function.
double weak_gradient_norm(const WeakFunctionVector& v, const Mesh& mesh);

/// ||q_h|| of an element-wise polynomial pressure.
double pressure_l2_norm(const PressureVector& p, const Mesh& mesh);

/// max over pressure basis functions q of |(div_w u_h, q)_h|; the discrete
/// incompressibility defect left by the solver.
double max_divergence_moment(const Solution& solution, const Mesh& mesh, int k);

/// L2 norm of a smooth function over the domain (error-norm quadrature).
double l2_norm(const ScalarFn& f, const Mesh& mesh, int exactness = 12);
double l2_norm(const std::array<ScalarFn, 2>& f, const Mesh& mesh, int exactness = 12);

}  // namespace wgs
