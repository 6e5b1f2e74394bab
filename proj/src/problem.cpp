#include "wgs/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace wgs {

ProblemCase registry_paper_case() {
  ProblemCase c;
  c.name = "paper";
  c.velocity = {[](const Vec2& x) { return x.x() * std::cos(x.y()); },
                [](const Vec2& x) { return std::cos(x.x()) - std::sin(x.y()); }};
  c.velocity_gradient = [](const Vec2& x) {
    Eigen::Matrix2d g;
    g(0, 0) = std::cos(x.y());
    g(0, 1) = -x.x() * std::sin(x.y());
    g(1, 0) = -std::sin(x.x());
    g(1, 1) = -std::cos(x.y());
    return g;
  };
  c.pressure = [](const Vec2& x) {
    return x.x() * x.x() * x.x() * x.y() - x.y() * x.y() * x.y() + 0.125;
  };
  c.force = {[](const Vec2& x) {
               return x.x() * std::cos(x.y()) + 3.0 * x.x() * x.x() * x.y();
             },
             [](const Vec2& x) {
               return std::cos(x.x()) - std::sin(x.y()) + x.x() * x.x() * x.x() -
                      3.0 * x.y() * x.y();
             }};
  return c;
}

ProblemCase problem_registry(const std::string& name) {
  if (name == "paper") return registry_paper_case();
  throw std::invalid_argument("problem_registry: unknown case '" + name + "'");
}

std::vector<std::string> problem_names() { return {"paper"}; }

}  // namespace wgs
