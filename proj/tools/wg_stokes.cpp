#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "wgs/study.hpp"
#include "wgs/system.hpp"
#include "wgs/verify.hpp"

namespace {

/// Applies a simple key=value file to the study configuration. Keys mirror the
/// long option names; values given on the command line win over the file.
void apply_config_file(const std::string& path, const CLI::App& study,
                       wgs::StudyConfig& config) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);

  const auto given = [&study](const std::string& name) { return study.count(name) > 0; };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "k") {
      if (!given("--k")) config.k = std::stoi(value);
    } else if (key == "n0") {
      if (!given("--n0")) config.n0 = std::stoi(value);
    } else if (key == "levels") {
      if (!given("--levels")) config.levels = std::stoi(value);
    } else if (key == "case") {
      if (!given("--case")) config.case_name = value;
    } else if (key == "format") {
      if (!given("--format")) config.format = value;
    } else if (key == "tol") {
      if (!given("--tol")) config.solver.tolerance = std::stod(value);
    } else if (key == "deterministic") {
      if (!given("--deterministic"))
        config.solver.deterministic = (value == "1" || value == "true" || value == "yes");
    } else if (key == "dump-mesh") {
      if (!given("--dump-mesh")) config.dump_mesh_path = value;
    } else if (key == "dump-system") {
      if (!given("--dump-system")) config.dump_system_path = value;
    } else if (key == "max-unknowns") {
      if (!given("--max-unknowns")) config.max_unknowns = std::stol(value);
    } else {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key '" + key +
                               "'");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer-free weak Galerkin solver for the stationary Stokes problem"};
  app.require_subcommand(1);

  wgs::StudyConfig config;
  CLI::App* study = app.add_subcommand("study", "run a refinement study and print the error table");
  study->add_option("--k", config.k, "interior velocity polynomial degree")
      ->capture_default_str();
  study->add_option("--n0", config.n0, "coarsest grid count per side")->capture_default_str();
  study->add_option("--levels", config.levels, "number of uniform refinement levels")
      ->capture_default_str();
  study->add_option("--case", config.case_name, "manufactured problem case")
      ->capture_default_str();
  study->add_option("--format", config.format, "report format")
      ->check(CLI::IsMember({"csv", "md", "json"}))
      ->capture_default_str();
  study->add_option("--tol", config.solver.tolerance, "relative residual tolerance")
      ->capture_default_str();
  study->add_flag("--deterministic", config.solver.deterministic,
                  "force the bit-stable solve path");
  study->add_option("--dump-mesh", config.dump_mesh_path,
                    "write each level's mesh in plain text to this path");
  study->add_option("--dump-system", config.dump_system_path,
                    "write each level's matrix (row col value) and right-hand side");
  study->add_option("--max-unknowns", config.max_unknowns,
                    "refuse studies whose finest level exceeds this unknown count")
      ->capture_default_str();
  std::string config_path;
  study->add_option("--config", config_path,
                    "key=value configuration file; command-line flags override");

  CLI::App* verify = app.add_subcommand("verify", "run the operator property suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (study->parsed()) {
      if (!config_path.empty()) apply_config_file(config_path, *study, config);
      const wgs::StudyResult result = wgs::run_study(config);
      std::cout << result.report;
      return 0;
    }
    if (verify->parsed()) {
      const wgs::VerifyReport report = wgs::run_verify();
      std::cout << wgs::format_verify(report);
      return report.all_passed() ? 0 : 1;
    }
  } catch (const wgs::SolveError& err) {
    std::cerr << "solver failure: " << err.what()
              << " (achieved residual " << err.achieved_residual << ")\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
