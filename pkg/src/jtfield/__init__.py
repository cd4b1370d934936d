"""Adiabatic ground state and entanglement sharing of a vibronic qubit model.

A qubit in a strong transverse field, linearly coupled to two degenerate
oscillator modes, reduces in the adiabatic limit to a radial eigenproblem
on the lower potential surface. This package solves that problem, extracts
the Bloch components of the qubit, and evaluates all bipartite I-tangles
plus the I-residual tangle across the coupling-field plane.
"""

from .model import (
    ApesPoint,
    DressingPair,
    ModelParams,
    apes_eval,
    apes_minimum,
    dressing,
    lambda_components,
    make_params,
    params_from_physical,
    theta,
    w_minus,
    w_minus_quartic,
)
from .solver import (
    BracketError,
    ConvergenceError,
    CutoffError,
    RadialGrid,
    RadialState,
    default_grid,
    numerov_oracle,
    refine_potential,
    refine_scaled,
    refine_until,
    scaled_grid,
    solve_physical,
    solve_potential,
    solve_scaled,
    tridiagonal_system,
)
from .observables import BlochVector, bloch, moment, overlaps
from .tangles import (
    RankTwoState,
    TangleReport,
    generic_rank2_tangle,
    m_matrix,
    pure_tangle,
    q_partition_tangle,
    rank2_from_bloch,
    residual_average,
    t_tensor,
    t_tensor_closed,
    tangle_report,
)
from .asymptotics import (
    RegimeEstimate,
    critical,
    recombine_energy,
    scaled_moments,
    small_coupling,
    strong_coupling,
    symanzik_zeta,
)
from .sweep import (
    ConfigError,
    ScalingFit,
    SweepConfig,
    SweepRow,
    default_config,
    load_config,
    parse_config,
    run_scaling,
    run_sweep,
    run_wavefunctions,
)
from .validate import CheckResult, run_validate

__version__ = "0.1.0"

__all__ = [
    "ApesPoint",
    "DressingPair",
    "ModelParams",
    "apes_eval",
    "apes_minimum",
    "dressing",
    "lambda_components",
    "make_params",
    "params_from_physical",
    "theta",
    "w_minus",
    "w_minus_quartic",
    "BracketError",
    "ConvergenceError",
    "CutoffError",
    "RadialGrid",
    "RadialState",
    "default_grid",
    "numerov_oracle",
    "refine_potential",
    "refine_scaled",
    "refine_until",
    "scaled_grid",
    "solve_physical",
    "solve_potential",
    "solve_scaled",
    "tridiagonal_system",
    "BlochVector",
    "bloch",
    "moment",
    "overlaps",
    "RankTwoState",
    "TangleReport",
    "generic_rank2_tangle",
    "m_matrix",
    "pure_tangle",
    "q_partition_tangle",
    "rank2_from_bloch",
    "residual_average",
    "t_tensor",
    "t_tensor_closed",
    "tangle_report",
    "RegimeEstimate",
    "critical",
    "recombine_energy",
    "scaled_moments",
    "small_coupling",
    "strong_coupling",
    "symanzik_zeta",
    "ConfigError",
    "ScalingFit",
    "SweepConfig",
    "SweepRow",
    "default_config",
    "load_config",
    "parse_config",
    "run_scaling",
    "run_sweep",
    "run_wavefunctions",
    "CheckResult",
    "run_validate",
    "__version__",
]
