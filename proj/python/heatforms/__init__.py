"""Differential-form heat kernels on discrete and analytic surfaces."""

from _heatforms import (  # noqa: F401
    H2Point,
    MassScheme,
    SimplicialComplex,
    SuiteConfig,
    TorusPoint,
    VerificationReport,
    all_gated_pass,
    boundary_matrix,
    builtin_mesh,
    coboundary,
    h2_distance,
    h2_k0,
    h2_k1,
    harmonic_dimensions,
    heat_kernel,
    hodge_laplacian,
    load_off,
    parse_mass_scheme,
    run_suite,
    torus_k0,
    torus_k1,
    torus_k2,
    torus_truncation,
)

__all__ = [
    "H2Point",
    "MassScheme",
    "SimplicialComplex",
    "SuiteConfig",
    "TorusPoint",
    "VerificationReport",
    "all_gated_pass",
    "boundary_matrix",
    "builtin_mesh",
    "coboundary",
    "h2_distance",
    "h2_k0",
    "h2_k1",
    "harmonic_dimensions",
    "heat_kernel",
    "hodge_laplacian",
    "load_off",
    "parse_mass_scheme",
    "run_suite",
    "torus_k0",
    "torus_k1",
    "torus_k2",
    "torus_truncation",
]
