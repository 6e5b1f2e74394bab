#pragma once

#include "wgs/mesh.hpp"

namespace wgs {

/// Discrete inf-sup constant beta_h: the square root of the smallest nonzero
/// eigenvalue of the pressure Schur complement Bm A^{-1} Bm^T measured against
/// the pressure mass matrix, with the constant-pressure mode deflated. A is
/// the velocity block with homogeneous boundary traces eliminated, so the
/// estimate realizes sup_v (div_w v, q)_h / ||grad_w v||_h >= beta ||q||.
///
/// Requires a desk-scale mesh (<= ~2e4 unknowns); throws std::invalid_argument
/// beyond that.
double estimate_infsup(const Mesh& mesh, int k);

}  // namespace wgs
