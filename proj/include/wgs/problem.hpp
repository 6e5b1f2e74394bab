#pragma once

#include <string>
#include <vector>

#include "wgs/projections.hpp"
#include "wgs/system.hpp"

namespace wgs {

/// Manufactured Stokes case: exact divergence-free velocity and mean-zero
/// pressure, with the force derived as f = -laplace(u) + grad(p) and boundary
/// data g = u restricted to the boundary.
struct ProblemCase {
  std::string name;
  std::array<ScalarFn, 2> velocity;
  GradFn velocity_gradient;
  ScalarFn pressure;
  std::array<ScalarFn, 2> force;

  StokesData data() const { return StokesData{force, velocity}; }
};

/// u = (x cos y, cos x - sin y), p = x^3 y - y^3 + 1/8,
/// f = (x cos y + 3 x^2 y, cos x - sin y + x^3 - 3 y^2).
ProblemCase registry_paper_case();

/// Looks a case up by name; throws std::invalid_argument for unknown names.
ProblemCase problem_registry(const std::string& name);

std::vector<std::string> problem_names();

}  // namespace wgs
