"""Stabilizer-free weak Galerkin solver for the stationary Stokes problem."""

try:
    from ._wgstokes import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    from _wgstokes import *  # noqa: F401,F403  (flat build-tree layout)

__all__ = [
    "Mesh",
    "build_structured",
    "refine",
    "validate",
    "dump_mesh",
    "predict_unknowns",
    "problem_names",
    "estimate_infsup",
    "solve_case",
    "run_study",
    "verify",
]
