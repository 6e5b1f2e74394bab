#include "wgs/convergence.hpp"

#include <cmath>

namespace wgs {

std::optional<double> rate_between(double e_coarse, double e_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0)) return std::nullopt;
  return std::log(e_coarse / e_fine) / std::log(2.0);
}

ConvergenceRecord convergence_rates(std::vector<ErrorReport> levels) {
  ConvergenceRecord record;
  record.levels = std::move(levels);
  for (size_t j = 0; j + 1 < record.levels.size(); ++j) {
    const ErrorReport& c = record.levels[j];
    const ErrorReport& f = record.levels[j + 1];
    RateRow row;
    row.energy = rate_between(c.energy, f.energy);
    row.pressure = rate_between(c.pressure, f.pressure);
    row.superclose = rate_between(c.superclose, f.superclose);
    record.rates.push_back(row);
  }
  return record;
}

}  // namespace wgs
