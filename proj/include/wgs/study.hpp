#pragma once

#include <string>

#include "wgs/convergence.hpp"
#include "wgs/system.hpp"

namespace wgs {

/// Configuration of a refinement study: solve the chosen case on meshes
/// n0, 2 n0, 4 n0, ... and report errors and rates.
struct StudyConfig {
  int k = 0;
  int n0 = 10;
  int levels = 4;
  std::string case_name = "paper";
  std::string format = "md";  ///< csv | md | json
  SolverOptions solver;
  std::string dump_mesh_path;    ///< empty = no dump; per-level suffix ".l<j>" when levels > 1
  std::string dump_system_path;  ///< same convention
  long max_unknowns = 2000000;
};

struct StudyResult {
  ConvergenceRecord record;
  std::string report;
};

/// Runs the study coarse-to-fine. Refuses configs whose finest level exceeds
/// max_unknowns (std::invalid_argument); solver failures propagate as
/// SolveError with the failing level named.
StudyResult run_study(const StudyConfig& config);

/// Formats a record in the table layout of the study reports: one row per
/// level with grid pitch, the three errors in 5-significant-digit scientific
/// notation, and the rate columns.
std::string format_report(const ConvergenceRecord& record, const std::string& format);

}  // namespace wgs
