#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "wgs/study.hpp"

using namespace wgs;

namespace {

bool file_exists(const std::string& path) { return std::ifstream(path).good(); }

}  // namespace

TEST_SUITE("study") {

TEST_CASE("coarse refinement study produces decaying errors and rates") {
  StudyConfig config;
  config.k = 0;
  config.n0 = 2;
  config.levels = 3;
  const StudyResult result = run_study(config);
  REQUIRE(result.record.levels.size() == 3);
  REQUIRE(result.record.rates.size() == 2);
  for (size_t j = 0; j < result.record.levels.size(); ++j) {
    const ErrorReport& level = result.record.levels[j];
    CHECK(level.n == 2 << j);
    CHECK(level.grid_pitch == doctest::Approx(1.0 / level.n));
    CHECK(level.energy > 0.0);
    CHECK(level.pressure > 0.0);
    CHECK(level.superclose > 0.0);
    CHECK(level.residual <= 1e-10);
    CHECK(level.max_div_moment <= 1e-8);
    CHECK(level.stability_ratio > 0.0);
    if (j > 0) {
      CHECK(level.energy < result.record.levels[j - 1].energy);
      CHECK(level.pressure < result.record.levels[j - 1].pressure);
    }
  }
  // even at these coarse sizes the first-order pair is clearly converging
  // (asymptotic rates: energy 1, pressure 1, superclose 2)
  CHECK(result.record.rates.back().energy.value() > 0.5);
  CHECK(result.record.rates.back().pressure.value() > 0.6);
  CHECK(result.record.rates.back().superclose.value() > 1.2);
}

TEST_CASE("report formats render the same record") {
  StudyConfig config;
  config.k = 0;
  config.n0 = 2;
  config.levels = 2;
  const StudyResult result = run_study(config);

  const std::string md = format_report(result.record, "md");
  CHECK(md.find("| 1/2") != std::string::npos);
  CHECK(md.find("| 1/4") != std::string::npos);
  CHECK(md.find("--") != std::string::npos);  // no rate on the first row

  const std::string csv = format_report(result.record, "csv");
  long lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 3);  // header + one row per level

  const nlohmann::json parsed = nlohmann::json::parse(format_report(result.record, "json"));
  REQUIRE(parsed.contains("levels"));
  CHECK(parsed["levels"].size() == 2);
  CHECK(parsed["levels"][0].contains("energy"));
  CHECK(parsed["rates"].size() == 1);
  CHECK_THROWS_AS(format_report(result.record, "xml"), std::invalid_argument);
}

TEST_CASE("study runs are deterministic") {
  StudyConfig config;
  config.k = 1;
  config.n0 = 2;
  config.levels = 2;
  config.solver.deterministic = true;
  const StudyResult a = run_study(config);
  const StudyResult b = run_study(config);
  REQUIRE(a.record.levels.size() == b.record.levels.size());
  for (size_t j = 0; j < a.record.levels.size(); ++j) {
    CHECK(a.record.levels[j].energy == b.record.levels[j].energy);
    CHECK(a.record.levels[j].pressure == b.record.levels[j].pressure);
    CHECK(a.record.levels[j].superclose == b.record.levels[j].superclose);
  }
  CHECK(a.report == b.report);
}

TEST_CASE("dump paths gain a per-level suffix") {
  StudyConfig config;
  config.k = 0;
  config.n0 = 2;
  config.levels = 2;
  config.dump_mesh_path = "study_mesh_dump.txt";
  config.dump_system_path = "study_system_dump.txt";
  run_study(config);
  for (const std::string base : {"study_mesh_dump.txt", "study_system_dump.txt"}) {
    CHECK(file_exists(base + ".l0"));
    CHECK(file_exists(base + ".l1"));
    std::remove((base + ".l0").c_str());
    std::remove((base + ".l1").c_str());
  }
  std::remove("study_system_dump.txt.l0.rhs");
  std::remove("study_system_dump.txt.l1.rhs");

  config.levels = 1;
  run_study(config);
  CHECK(file_exists("study_mesh_dump.txt"));
  CHECK(file_exists("study_system_dump.txt"));
  std::remove("study_mesh_dump.txt");
  std::remove("study_system_dump.txt");
  std::remove("study_system_dump.txt.rhs");
}

TEST_CASE("invalid configurations are rejected up front") {
  StudyConfig config;
  config.levels = 0;
  CHECK_THROWS_AS(run_study(config), std::invalid_argument);

  config = StudyConfig{};
  config.n0 = 0;
  CHECK_THROWS_AS(run_study(config), std::invalid_argument);

  config = StudyConfig{};
  config.k = -1;
  CHECK_THROWS_AS(run_study(config), std::invalid_argument);

  config = StudyConfig{};
  config.case_name = "unknown-case";
  CHECK_THROWS_AS(run_study(config), std::invalid_argument);

  config = StudyConfig{};
  config.n0 = 64;
  config.levels = 4;
  config.max_unknowns = 100000;  // finest level would far exceed this
  CHECK_THROWS_AS(run_study(config), std::invalid_argument);
}

}  // TEST_SUITE
