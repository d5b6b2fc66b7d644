"""Exact bigraded exterior calculus on invariant frames (python bindings)."""

from _acx import (  # noqa: F401
    AcxError,
    cohomology_dims,
    deform_check,
    dtheta_table,
    run_suite,
    suite_names,
    validate,
)

__all__ = [
    "AcxError",
    "cohomology_dims",
    "deform_check",
    "dtheta_table",
    "run_suite",
    "suite_names",
    "validate",
]
