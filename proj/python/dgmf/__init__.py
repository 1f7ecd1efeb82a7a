"""Exact linkage of DG algebra resolutions and matrix factorizations."""

from ._dgmf import (  # noqa: F401
    Bundle,
    DgmfError,
    InputError,
    Pipeline,
    PrecheckFailed,
    RNotUnit,
    SolverGaveUp,
    cli_build,
    cli_validate,
    example,
    load_bundle,
    normalize_poly,
    parse_bundle,
    run_pipeline,
)

__all__ = [
    "Bundle",
    "DgmfError",
    "InputError",
    "Pipeline",
    "PrecheckFailed",
    "RNotUnit",
    "SolverGaveUp",
    "cli_build",
    "cli_validate",
    "example",
    "load_bundle",
    "normalize_poly",
    "parse_bundle",
    "run_pipeline",
]
