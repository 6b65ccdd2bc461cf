"""Closed-form Gaussian-integral identities with brute-force verification.

The package pairs every closed-form evaluator (1-D families, n-dimensional
quadratic forms, oscillatory Fourier branches, exterior-algebra integrals,
scale-parameter series, molecular integrals) with an independent numerical
oracle, and ships a catalog runner that records a verdict per identity,
including suspected misprints in the published forms.
"""

from . import boys, core, grassmann, hbar_series, multidim, oracle, quantum, scalar1d
from .catalog import (
    IdentityRecord,
    IdentityReport,
    SuiteReport,
    build_catalog,
    list_identities,
    run_identity,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "boys",
    "core",
    "grassmann",
    "hbar_series",
    "multidim",
    "oracle",
    "quantum",
    "scalar1d",
    "IdentityRecord",
    "IdentityReport",
    "SuiteReport",
    "build_catalog",
    "list_identities",
    "run_identity",
    "run_suite",
    "__version__",
]
