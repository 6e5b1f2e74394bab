#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wgs/dof_map.hpp"
#include "wgs/infsup.hpp"
#include "wgs/mesh.hpp"
#include "wgs/norms.hpp"
#include "wgs/problem.hpp"
#include "wgs/study.hpp"
#include "wgs/system.hpp"
#include "wgs/verify.hpp"

namespace py = pybind11;

namespace {

py::dict level_dict(const wgs::ErrorReport& lv) {
  py::dict d;
  d["n"] = lv.n;
  d["grid_pitch"] = lv.grid_pitch;
  d["energy"] = lv.energy;
  d["pressure"] = lv.pressure;
  d["superclose"] = lv.superclose;
  d["residual"] = lv.residual;
  d["max_div_moment"] = lv.max_div_moment;
  d["stability_ratio"] = lv.stability_ratio;
  return d;
}

}  // namespace

PYBIND11_MODULE(_wgstokes, m) {
  m.doc() = "stabilizer-free weak Galerkin solver for the stationary Stokes problem";

  py::class_<wgs::Mesh>(m, "Mesh")
      .def_property_readonly("num_vertices", &wgs::Mesh::num_vertices)
      .def_property_readonly("num_edges", &wgs::Mesh::num_edges)
      .def_property_readonly("num_triangles", &wgs::Mesh::num_triangles)
      .def_property_readonly("num_boundary_edges", &wgs::Mesh::num_boundary_edges)
      .def_readonly("h", &wgs::Mesh::h)
      .def("__repr__", [](const wgs::Mesh& mesh) {
        return "<Mesh V=" + std::to_string(mesh.num_vertices()) +
               " E=" + std::to_string(mesh.num_edges()) +
               " T=" + std::to_string(mesh.num_triangles()) + ">";
      });

  m.def("build_structured", &wgs::build_structured, py::arg("n"),
        "uniform n-by-n triangulation of the unit square");
  m.def("refine", &wgs::refine, py::arg("mesh"), "red refinement via edge midpoints");
  m.def("validate", &wgs::validate, py::arg("mesh"),
        "list of mesh invariant violations (empty when healthy)");
  m.def("dump_mesh", &wgs::dump_mesh, py::arg("mesh"), py::arg("path"));
  m.def("predict_unknowns", &wgs::predict_unknowns, py::arg("n"), py::arg("k"),
        "unknown count of the structured n-by-n problem");
  m.def("problem_names", &wgs::problem_names);

  m.def(
      "estimate_infsup",
      [](int n, int k) { return wgs::estimate_infsup(wgs::build_structured(n), k); },
      py::arg("n"), py::arg("k"), "discrete inf-sup constant on the structured n-by-n mesh");

  m.def(
      "solve_case",
      [](int k, int n, const std::string& case_name, double tol) {
        const wgs::Mesh mesh = wgs::build_structured(n);
        const wgs::ProblemCase problem = wgs::problem_registry(case_name);
        wgs::SolverOptions options;
        options.tolerance = tol;
        const wgs::Solution sol = wgs::solve(wgs::assemble(mesh, k, problem.data(), options), mesh);
        py::dict d;
        d["method"] = sol.diag.method;
        d["unknowns"] = sol.diag.unknowns;
        d["nonzeros"] = sol.diag.nonzeros;
        d["iterations"] = sol.diag.iterations;
        d["residual"] = sol.diag.residual;
        d["energy_error"] = wgs::energy_error(sol, problem.velocity_gradient, mesh, k);
        d["pressure_error"] = wgs::pressure_error(sol, problem.pressure, mesh, k);
        d["superclose_error"] = wgs::superclose_error(sol, problem.velocity, mesh, k);
        d["max_div_moment"] = wgs::max_divergence_moment(sol, mesh, k);
        return d;
      },
      py::arg("k"), py::arg("n"), py::arg("case_name") = "paper", py::arg("tol") = 1e-10,
      "single-level solve with error and solver diagnostics");

  m.def(
      "run_study",
      [](int k, int n0, int levels, const std::string& case_name, const std::string& format,
         double tol, long max_unknowns) {
        wgs::StudyConfig config;
        config.k = k;
        config.n0 = n0;
        config.levels = levels;
        config.case_name = case_name;
        config.format = format;
        config.solver.tolerance = tol;
        config.max_unknowns = max_unknowns;
        const wgs::StudyResult result = wgs::run_study(config);
        py::dict out;
        out["report"] = result.report;
        py::list lv;
        for (const auto& level : result.record.levels) lv.append(level_dict(level));
        out["levels"] = lv;
        py::list rates;
        for (const auto& row : result.record.rates) {
          py::dict r;
          if (row.energy) r["energy"] = *row.energy;
          if (row.pressure) r["pressure"] = *row.pressure;
          if (row.superclose) r["superclose"] = *row.superclose;
          rates.append(r);
        }
        out["rates"] = rates;
        return out;
      },
      py::arg("k") = 0, py::arg("n0") = 10, py::arg("levels") = 4,
      py::arg("case_name") = "paper", py::arg("format") = "md", py::arg("tol") = 1e-10,
      py::arg("max_unknowns") = 2000000L, "refinement study returning levels, rates, and report");

  m.def(
      "verify",
      [](unsigned seed) {
        const wgs::VerifyReport report = wgs::run_verify(seed);
        py::list checks;
        for (const auto& check : report.checks) {
          py::dict d;
          d["name"] = check.name;
          d["passed"] = check.passed;
          d["value"] = check.value;
          d["threshold"] = check.threshold;
          d["detail"] = check.detail;
          checks.append(d);
        }
        py::dict out;
        out["checks"] = checks;
        out["all_passed"] = report.all_passed();
        out["text"] = wgs::format_verify(report);
        return out;
      },
      py::arg("seed") = 20240815u, "operator property suite");
}
