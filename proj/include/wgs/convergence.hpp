#pragma once

#include <optional>
#include <vector>

namespace wgs {

/// Per-level error record of a convergence study. grid_pitch is the 1/n label
/// reported by the tables (not the element diameter).
struct ErrorReport {
  int n = 0;
  double grid_pitch = 0.0;
  double energy = 0.0;
  double pressure = 0.0;
  double superclose = 0.0;
  // solver/stability diagnostics carried along for monitoring
  double residual = 0.0;
  double max_div_moment = 0.0;
  double stability_ratio = 0.0;  ///< (||grad_w u_h||_h + ||p_h||) / ||f||
};

/// Rates between consecutive levels, r = ln(e_h / e_{h/2}) / ln 2 per error
/// column; absent where an error is zero or negative.
struct RateRow {
  std::optional<double> energy;
  std::optional<double> pressure;
  std::optional<double> superclose;
};

struct ConvergenceRecord {
  std::vector<ErrorReport> levels;
  std::vector<RateRow> rates;  ///< rates[j] pairs levels j and j+1; size levels-1
};

/// Computes the per-column rates for an ordered list of levels.
ConvergenceRecord convergence_rates(std::vector<ErrorReport> levels);

/// The rate formula for one error pair; absent unless both errors are > 0.
std::optional<double> rate_between(double e_coarse, double e_fine);

}  // namespace wgs
