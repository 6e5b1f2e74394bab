"""End-to-end smoke tests of the Python bindings."""

import wgstokes


def test_mesh_counts():
    mesh = wgstokes.build_structured(4)
    assert mesh.num_vertices == 25
    assert mesh.num_triangles == 32
    assert mesh.num_edges == 56
    assert mesh.num_boundary_edges == 16
    assert abs(mesh.h - 2**0.5 / 4) < 1e-15
    assert wgstokes.validate(mesh) == []
    assert "T=32" in repr(mesh)


def test_refine_halves_the_pitch():
    mesh = wgstokes.build_structured(3)
    fine = wgstokes.refine(mesh)
    assert fine.num_triangles == 4 * mesh.num_triangles
    assert abs(fine.h - mesh.h / 2) < 1e-15


def test_predict_unknowns():
    assert wgstokes.predict_unknowns(1, 0) == 11
    assert wgstokes.predict_unknowns(1, 1) == 25


def test_problem_registry():
    assert "paper" in wgstokes.problem_names()


def test_solve_case_meets_the_residual_contract():
    result = wgstokes.solve_case(0, 4)
    assert result["method"] == "direct"
    assert result["unknowns"] == wgstokes.predict_unknowns(4, 0)
    assert result["residual"] <= 1e-10
    assert result["max_div_moment"] <= 1e-8
    assert 0 < result["energy_error"] < 1.0


def test_run_study_reports_rates():
    result = wgstokes.run_study(k=0, n0=2, levels=3, format="csv")
    assert len(result["levels"]) == 3
    assert len(result["rates"]) == 2
    assert result["levels"][2]["energy"] < result["levels"][0]["energy"]
    assert result["rates"][-1]["superclose"] > 1.0
    assert result["report"].startswith("n,grid_pitch")


def test_infsup_positive():
    beta = wgstokes.estimate_infsup(4, 0)
    assert 0.05 < beta < 1.5


def test_verify_suite_passes():
    result = wgstokes.verify()
    assert result["all_passed"]
    assert len(result["checks"]) >= 10
    assert "PASS" in result["text"]
