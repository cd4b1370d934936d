"""Bloch-vector components and radial moments of a solved ground state.

The two numbers (b_z, b_phi) fully parameterize every reduced density
operator of the adiabatic ground state, so all entanglement quantities
downstream take only a BlochVector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import ModelParams, theta
from .solver import RadialState

__all__ = [
    "BlochVector",
    "bloch",
    "overlaps",
    "moment",
]

NORM_TOL = 1e-10
BOUND_SLACK = 1e-9


@dataclass(frozen=True)
class BlochVector:
    """Qubit Bloch-vector components of the adiabatic ground state.

    b_z is the component along the field (nonpositive: the field polarizes
    the qubit against +z) and b_phi the equatorial component along the
    angular-mode direction (nonpositive for the ground state; stored
    signed). Purity bounds |b| <= 1.
    """

    b_z: float
    b_phi: float

    def __post_init__(self):
        if not -1.0 - BOUND_SLACK <= self.b_z <= BOUND_SLACK:
            raise ValueError(f"b_z must lie in [-1, 0], got {self.b_z}")
        if abs(self.b_phi) > 1.0 + BOUND_SLACK:
            raise ValueError(f"b_phi must lie in [-1, 1], got {self.b_phi}")
        if self.norm_sq > 1.0 + BOUND_SLACK:
            raise ValueError(
                f"purity bound violated: b_z^2 + b_phi^2 = {self.norm_sq}"
            )

    @property
    def norm_sq(self) -> float:
        return self.b_z**2 + self.b_phi**2


def bloch(params: ModelParams, state: RadialState) -> BlochVector:
    """Bloch components by midpoint quadrature over the solved state.

    b_z = -int q phi^2 (D/Theta) dq and b_phi = -int q phi^2 (L q/Theta) dq.

    Raises
    ------
    ValueError
        If the state is not normalized to 1e-10 under the midpoint rule.
    """
    q = state.grid.nodes
    h = state.grid.h
    w = q * state.phi**2
    norm = float(np.sum(w)) * h
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"state not normalized: int q phi^2 dq = {norm}")
    th = theta(params, q)
    b_z = -float(np.sum(w * (params.D / th))) * h
    b_phi = -float(np.sum(w * (params.L * q / th))) * h
    return BlochVector(b_z=b_z, b_phi=b_phi)


def overlaps(b: BlochVector) -> tuple[float, float, float]:
    """Gram entries (aa, bb, ab) of the unnormalized angular-mode states.

    aa = (1 + b_z)/2, bb = (1 - b_z)/2, ab = -b_phi; aa + bb = 1. These are
    the squared norms and mutual overlap of the two q-mode states attached
    to the dressed qubit branches.
    """
    return 0.5 * (1.0 + b.b_z), 0.5 * (1.0 - b.b_z), -b.b_phi


def moment(state: RadialState, nu: int) -> float:
    """Radial moment <q^nu> with measure q dq (x dx for scaled states).

    Parameters
    ----------
    state : RadialState
    nu : int
        Moment order, 0 <= nu <= 8. nu = 0 returns the norm.
    """
    if not 0 <= nu <= 8:
        raise ValueError(f"nu must lie in 0..8, got {nu}")
    q = state.grid.nodes
    return float(np.sum(q ** (nu + 1) * state.phi**2)) * state.grid.h
