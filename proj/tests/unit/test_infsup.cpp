#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "wgs/dof_map.hpp"
#include "wgs/infsup.hpp"
#include "wgs/mesh.hpp"

using namespace wgs;

namespace {

/// Same triangulation as build_structured(n), with the element list shuffled:
/// the inf-sup constant is a property of the space, not of the numbering.
Mesh shuffled_structured(int n, unsigned seed) {
  const Mesh base = build_structured(n);
  std::vector<std::array<int, 3>> tris = base.triangles;
  std::shuffle(tris.begin(), tris.end(), std::mt19937(seed));
  return from_triangles(base.vertices, tris);
}

}  // namespace

TEST_SUITE("infsup") {

TEST_CASE("estimate is positive and mesh-size stable") {
  const double b2 = estimate_infsup(build_structured(2), 0);
  const double b4 = estimate_infsup(build_structured(4), 0);
  CHECK(b2 > 0.05);
  CHECK(b2 < 1.5);
  CHECK(b4 > 0.05);
  // uniform refinement must not collapse the constant
  CHECK(b4 > 0.5 * b2);
}

TEST_CASE("estimate is positive for the quadratic pair") {
  const double b = estimate_infsup(build_structured(2), 1);
  CHECK(b > 0.05);
  CHECK(b < 1.5);
}

TEST_CASE("estimate is deterministic and numbering invariant") {
  const Mesh mesh = build_structured(3);
  const double a = estimate_infsup(mesh, 0);
  const double b = estimate_infsup(mesh, 0);
  CHECK(a == b);
  const double c = estimate_infsup(shuffled_structured(3, 99), 0);
  CHECK(std::abs(a - c) < 1e-9);
}

TEST_CASE("desk-scale guard rejects large meshes") {
  // n = 40 at k = 1 is far beyond the dense-eigenproblem budget
  CHECK(predict_unknowns(40, 1) > 20000);
  CHECK_THROWS_AS(estimate_infsup(build_structured(40), 1), std::invalid_argument);
}

}  // TEST_SUITE
