#include "wgs/study.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "wgs/dof_map.hpp"
#include "wgs/norms.hpp"
#include "wgs/problem.hpp"

namespace wgs {

namespace {

std::string level_path(const std::string& base, int level, int levels) {
  if (levels <= 1) return base;
  return base + ".l" + std::to_string(level);
}

std::string fmt(const char* spec, double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string format_md(const ConvergenceRecord& record) {
  std::ostringstream out;
  out << "| h | energy | rate | pressure | rate | superclose | rate |\n";
  out << "|---|--------|------|----------|------|------------|------|\n";
  for (size_t j = 0; j < record.levels.size(); ++j) {
    const ErrorReport& lv = record.levels[j];
    auto rate = [&](std::optional<double> RateRow::* member) -> std::string {
      if (j == 0) return "--";
      const auto& r = record.rates[j - 1].*member;
      return r ? fmt("%.5f", *r) : "--";
    };
    out << "| 1/" << lv.n << " | " << fmt("%.4e", lv.energy) << " | " << rate(&RateRow::energy)
        << " | " << fmt("%.4e", lv.pressure) << " | " << rate(&RateRow::pressure) << " | "
        << fmt("%.4e", lv.superclose) << " | " << rate(&RateRow::superclose) << " |\n";
  }
  return out.str();
}

std::string format_csv(const ConvergenceRecord& record) {
  std::ostringstream out;
  out << "n,grid_pitch,energy,energy_rate,pressure,pressure_rate,superclose,superclose_rate,"
         "residual,max_div_moment,stability_ratio\n";
  for (size_t j = 0; j < record.levels.size(); ++j) {
    const ErrorReport& lv = record.levels[j];
    auto rate = [&](std::optional<double> RateRow::* member) -> std::string {
      if (j == 0) return "";
      const auto& r = record.rates[j - 1].*member;
      return r ? fmt("%.17g", *r) : "";
    };
    out << lv.n << ',' << fmt("%.17g", lv.grid_pitch) << ',' << fmt("%.17g", lv.energy) << ','
        << rate(&RateRow::energy) << ',' << fmt("%.17g", lv.pressure) << ','
        << rate(&RateRow::pressure) << ',' << fmt("%.17g", lv.superclose) << ','
        << rate(&RateRow::superclose) << ',' << fmt("%.17g", lv.residual) << ','
        << fmt("%.17g", lv.max_div_moment) << ',' << fmt("%.17g", lv.stability_ratio) << '\n';
  }
  return out.str();
}

std::string format_json(const ConvergenceRecord& record) {
  nlohmann::json root;
  root["levels"] = nlohmann::json::array();
  for (const ErrorReport& lv : record.levels) {
    root["levels"].push_back({{"n", lv.n},
                              {"grid_pitch", lv.grid_pitch},
                              {"energy", lv.energy},
                              {"pressure", lv.pressure},
                              {"superclose", lv.superclose},
                              {"residual", lv.residual},
                              {"max_div_moment", lv.max_div_moment},
                              {"stability_ratio", lv.stability_ratio}});
  }
  root["rates"] = nlohmann::json::array();
  for (const RateRow& r : record.rates) {
    nlohmann::json row;
    if (r.energy) row["energy"] = *r.energy;
    if (r.pressure) row["pressure"] = *r.pressure;
    if (r.superclose) row["superclose"] = *r.superclose;
    root["rates"].push_back(row);
  }
  return root.dump(2) + "\n";
}

}  // namespace

std::string format_report(const ConvergenceRecord& record, const std::string& format) {
  if (format == "md") return format_md(record);
  if (format == "csv") return format_csv(record);
  if (format == "json") return format_json(record);
  throw std::invalid_argument("format_report: unknown format '" + format + "'");
}

StudyResult run_study(const StudyConfig& config) {
  if (config.levels < 1) throw std::invalid_argument("run_study: levels must be >= 1");
  if (config.n0 < 1) throw std::invalid_argument("run_study: n0 must be >= 1");
  if (config.k < 0) throw std::invalid_argument("run_study: k must be >= 0");
  const ProblemCase problem = problem_registry(config.case_name);

  const int finest_n = config.n0 << (config.levels - 1);
  const long finest = predict_unknowns(finest_n, config.k);
  if (finest > config.max_unknowns)
    throw std::invalid_argument("run_study: finest level needs " + std::to_string(finest) +
                                " unknowns, above the limit of " +
                                std::to_string(config.max_unknowns));

  std::vector<ErrorReport> levels;
  for (int j = 0; j < config.levels; ++j) {
    const int n = config.n0 << j;
    const Mesh mesh = build_structured(n);
    if (!config.dump_mesh_path.empty())
      dump_mesh(mesh, level_path(config.dump_mesh_path, j, config.levels));

    const SaddleSystem system = assemble(mesh, config.k, problem.data(), config.solver);
    if (!config.dump_system_path.empty())
      dump_system(system, level_path(config.dump_system_path, j, config.levels));

    Solution solution;
    try {
      solution = solve(system, mesh);
    } catch (const SolveError& err) {
      throw SolveError("level n=" + std::to_string(n) + ": " + err.what(),
                       err.achieved_residual);
    }

    ErrorReport report;
    report.n = n;
    report.grid_pitch = 1.0 / n;
    report.energy = energy_error(solution, problem.velocity_gradient, mesh, config.k);
    report.pressure = pressure_error(solution, problem.pressure, mesh, config.k);
    report.superclose = superclose_error(solution, problem.velocity, mesh, config.k);
    report.residual = solution.diag.residual;
    report.max_div_moment = max_divergence_moment(solution, mesh, config.k);
    const double fnorm = l2_norm(problem.force, mesh);
    report.stability_ratio =
        (weak_gradient_norm(solution.velocity, mesh) + pressure_l2_norm(solution.pressure, mesh)) /
        fnorm;
    levels.push_back(report);
  }

  StudyResult result;
  result.record = convergence_rates(std::move(levels));
  result.report = format_report(result.record, config.format);
  return result;
}

}  // namespace wgs
