"""Polynomial root finding with fractional-order Newton iteration.

A classic Newton step uses f'. Replacing it with the Riemann-Liouville
derivative of order alpha turns the iteration into a family: different
orders flow to different roots, including complex ones, from a purely
real start point. Sweeping alpha and deduplicating the landings recovers
most of the root set of a real-coefficient polynomial.
"""

from ._backend import BACKEND, get_backend
from .errors import (
    DegenerateDifference,
    DegenerateLeadingCoefficient,
    Divergence,
    DerivativeVanished,
    DomainAlpha,
    FracNewtonError,
    InsufficientData,
    InvalidConfig,
    ParseError,
    PoleArgument,
    SingularPoint,
    SingularPower,
)
from .oracle import OracleResult, durand_kerner
from .poly import (
    FractionalDerivative,
    Polynomial,
    TableRow,
    frac_derivative_eval,
    frac_derivative_table,
)
from .solver import (
    IterationTrace,
    RootRecord,
    SolverConfig,
    Termination,
    aitken,
    estimate_order,
    iterate,
    phi_step,
    solve,
)
from .specialfn import cpow, gamma, rgamma
from .sweep import (
    DistinctRoot,
    SweepConfig,
    SweepReport,
    alpha_grid,
    cluster_roots,
    run_sweep,
    unpaired_conjugates,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DegenerateDifference",
    "DegenerateLeadingCoefficient",
    "DerivativeVanished",
    "DistinctRoot",
    "Divergence",
    "DomainAlpha",
    "FracNewtonError",
    "FractionalDerivative",
    "InsufficientData",
    "InvalidConfig",
    "IterationTrace",
    "OracleResult",
    "ParseError",
    "PoleArgument",
    "Polynomial",
    "RootRecord",
    "SingularPoint",
    "SingularPower",
    "SolverConfig",
    "SweepConfig",
    "SweepReport",
    "TableRow",
    "Termination",
    "aitken",
    "alpha_grid",
    "cluster_roots",
    "cpow",
    "durand_kerner",
    "estimate_order",
    "frac_derivative_eval",
    "frac_derivative_table",
    "gamma",
    "get_backend",
    "iterate",
    "phi_step",
    "rgamma",
    "run_sweep",
    "solve",
    "unpaired_conjugates",
    "__version__",
]
