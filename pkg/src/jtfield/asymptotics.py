"""Closed-form regime approximations for weak, strong, and near-critical coupling.

These serve both as fast evaluators and as independent oracles for the
numerical pipeline. Regime gates (alpha <= 0.2, alpha >= 5, |zeta| <= 1)
are testable conventions standing in for "much less", "much greater",
"near one".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .observables import BlochVector, moment
from .solver import refine_scaled

__all__ = [
    "RegimeEstimate",
    "small_coupling",
    "strong_coupling",
    "critical",
    "symanzik_zeta",
    "recombine_energy",
    "scaled_moments",
]


@dataclass(frozen=True)
class RegimeEstimate:
    """Closed-form tangle estimates for one parameter regime.

    Fields that a regime does not predict are None. width and center
    describe the approximate Gaussian radial state where one applies;
    zeta is populated by the critical regime only.
    """

    regime: str
    validity: str
    tau_E_phiq: float
    tau_phi_Eq: float
    tau_Ephi: float
    tau_q_Ephi: float
    residual: float
    bloch: BlochVector | None = None
    width: float | None = None
    center: float | None = None
    zeta: float | None = None

    def __post_init__(self):
        for name in ("tau_E_phiq", "tau_phi_Eq", "tau_Ephi", "tau_q_Ephi", "residual"):
            v = getattr(self, name)
            if not (math.isfinite(v) and -1e-12 <= v <= 1.0):
                raise ValueError(f"{name} must be finite and in [0, 1], got {v}")


def small_coupling(alpha: float, D: float) -> RegimeEstimate:
    """Leading-order tangles for alpha much less than 1.

    All tangles are linear in alpha/D; the radial state is a Gaussian of
    width parameter k = sqrt(1 - alpha) centered at the origin.
    """
    if not 0.0 <= alpha <= 0.2:
        raise ValueError(f"small-coupling regime requires alpha in [0, 0.2], got {alpha}")
    if D < 10.0:
        raise ValueError(f"small-coupling regime requires D >= 10, got {D}")
    r = alpha / D
    return RegimeEstimate(
        regime="small_coupling",
        validity="alpha <= 0.2, D >= 10",
        tau_E_phiq=2.0 * r,
        tau_phi_Eq=2.0 * r,
        tau_Ephi=0.5 * math.pi * r,
        tau_q_Ephi=(2.0 - 0.5 * math.pi) * r,
        residual=(2.0 - 0.5 * math.pi) * r,
        width=math.sqrt(1.0 - alpha),
        center=0.0,
    )


def strong_coupling(alpha: float, D: float) -> RegimeEstimate:
    """Leading-order tangles for alpha much greater than 1.

    The state localizes on the minimum circle q0; qubit tangles saturate as
    1 - 1/alpha^2 and the radial mode decouples as 1/(alpha^3 D), the
    latter kept to leading order only.
    """
    if alpha < 5.0:
        raise ValueError(f"strong-coupling regime requires alpha >= 5, got {alpha}")
    if D < 10.0:
        raise ValueError(f"strong-coupling regime requires D >= 10, got {D}")
    sat = 1.0 - 1.0 / alpha**2
    tau_q = 1.0 / (alpha**3 * D)
    return RegimeEstimate(
        regime="strong_coupling",
        validity="alpha >= 5, D >= 10",
        tau_E_phiq=sat,
        tau_phi_Eq=sat,
        tau_Ephi=sat,
        tau_q_Ephi=tau_q,
        residual=2.0 * tau_q / 3.0,
        width=math.sqrt(sat),
        center=math.sqrt(0.5 * D * (alpha - 1.0 / alpha)),
    )


@lru_cache(maxsize=8)
def scaled_moments(zeta: float = 0.0, tol: float = 1e-8) -> tuple[float, float, float, float]:
    """Moments <x>, <x^2>, <x^3>, <x^4> of the scaled ground state, cached."""
    state = refine_scaled(zeta, tol)
    return tuple(moment(state, nu) for nu in (1, 2, 3, 4))


def critical(
    alpha: float,
    D: float,
    moments: tuple[float, float, float, float] | None = None,
) -> RegimeEstimate:
    """Near-critical tangles from the scaled quartic-family moments.

    With g = 2 alpha/D^2,
    b_z ~ -1 + g^(1/3) <x^2> - (3/2) g^(2/3) <x^4> and
    b_phi ~ -sqrt(2) [g^(1/6) <x> - g^(1/2) <x^3>]; the tangles reduce to
    (4/D)^(2/3) times {<x^2>, <x>^2, <x^2> - <x>^2}. Moments default to the
    cached zeta = 0 values; callers may pass zeta-corrected ones.
    """
    zeta = symanzik_zeta(alpha, D)
    if abs(zeta) > 1.0:
        raise ValueError(f"critical regime requires |zeta| <= 1, got zeta = {zeta}")
    x1, x2, x3, x4 = moments if moments is not None else scaled_moments()
    g = 2.0 * alpha / D**2
    b_z = -1.0 + g ** (1.0 / 3.0) * x2 - 1.5 * g ** (2.0 / 3.0) * x4
    b_phi = -math.sqrt(2.0) * (g ** (1.0 / 6.0) * x1 - math.sqrt(g) * x3)
    pref = (4.0 / D) ** (2.0 / 3.0)
    return RegimeEstimate(
        regime="critical",
        validity="|zeta(alpha, D)| <= 1",
        tau_E_phiq=pref * x2,
        tau_phi_Eq=pref * x2,
        tau_Ephi=pref * x1**2,
        tau_q_Ephi=pref * (x2 - x1**2),
        residual=pref * (x2 - x1**2),
        bloch=BlochVector(b_z=b_z, b_phi=b_phi),
        zeta=zeta,
    )


def symanzik_zeta(alpha: float, D: float) -> float:
    """Scaling parameter zeta = (2 D/alpha^2)^(2/3) (1 - alpha).

    Collapses the quartic-approximated two-parameter problem onto the
    one-parameter scaled family.
    """
    if not (alpha > 0 and D > 0):
        raise ValueError(f"alpha and D must be positive, got ({alpha}, {D})")
    return (2.0 * D / alpha**2) ** (2.0 / 3.0) * (1.0 - alpha)


def recombine_energy(alpha: float, D: float, e_g: float) -> float:
    """Physical ground energy from a scaled one: -D + (alpha^2/(2 D))^(1/3) e_g.

    Exact for the quartic-approximated potential; e_g is the scaled ground
    energy at zeta = symanzik_zeta(alpha, D).
    """
    if not (alpha > 0 and D > 0):
        raise ValueError(f"alpha and D must be positive, got ({alpha}, {D})")
    return -D + (alpha**2 / (2.0 * D)) ** (1.0 / 3.0) * e_g
