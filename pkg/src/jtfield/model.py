"""Model parameters, adiabatic potential surfaces, and qubit dressing.

Dimensionless conventions: field D = 2*delta/omega, coupling L = 2*sqrt(2)*
lambda_c/omega, alpha = L**2/(2*D). All energies are in units of omega/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "ModelParams",
    "ApesPoint",
    "DressingPair",
    "make_params",
    "params_from_physical",
    "theta",
    "w_minus",
    "w_minus_quartic",
    "apes_eval",
    "apes_minimum",
    "dressing",
    "lambda_components",
]


@dataclass(frozen=True)
class ModelParams:
    """Physical and dimensionless model parameters.

    Attributes
    ----------
    omega : float
        Oscillator frequency (energy units, > 0).
    delta : float
        Transverse field strength (energy units, >= 0).
    lambda_c : float
        Vibronic coupling strength (energy units, >= 0).
    D : float
        Dimensionless field, 2*delta/omega.
    L : float
        Dimensionless coupling, 2*sqrt(2)*lambda_c/omega.
    alpha : float
        Dimensionless ratio L**2/(2*D).
    """

    omega: float
    delta: float
    lambda_c: float
    D: float
    L: float
    alpha: float

    def __post_init__(self):
        if not self.D > 0:
            raise ValueError(f"D must be positive, got {self.D}")
        if self.alpha < 0:
            raise ValueError(f"alpha must be nonnegative, got {self.alpha}")


@dataclass(frozen=True)
class ApesPoint:
    """Adiabatic potential surfaces evaluated at one radius.

    theta = sqrt(D**2 + L**2 q**2) is the effective field magnitude and
    w_minus/w_plus = q**2 -/+ theta are the lower/upper surfaces.
    """

    q: float
    theta: float
    w_minus: float
    w_plus: float


@dataclass(frozen=True)
class DressingPair:
    """Qubit dressing amplitudes a(q), b(q) with a**2 + b**2 = 1.

    a grows from 0 (field-polarized) to 1/sqrt(2) (fully dressed) as the
    coupling term L*q overwhelms the field D.
    """

    a: float
    b: float


def make_params(D: float, alpha: float) -> ModelParams:
    """Build parameters from the dimensionless pair (D, alpha).

    omega is set to 1 energy unit; delta and lambda_c follow from the
    definitions of D and L. L = sqrt(2*D*alpha).

    Parameters
    ----------
    D : float
        Dimensionless field, > 0.
    alpha : float
        Dimensionless coupling ratio, >= 0.
    """
    if not D > 0:
        raise ValueError(f"D must be positive, got {D}")
    if alpha < 0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")
    L = math.sqrt(2.0 * D * alpha)
    omega = 1.0
    return ModelParams(
        omega=omega,
        delta=0.5 * D * omega,
        lambda_c=L * omega / (2.0 * math.sqrt(2.0)),
        D=D,
        L=L,
        alpha=alpha,
    )


def params_from_physical(omega: float, delta: float, lambda_c: float) -> ModelParams:
    """Build parameters from physical (omega, delta, lambda_c)."""
    if not omega > 0:
        raise ValueError(f"omega must be positive, got {omega}")
    if delta < 0 or lambda_c < 0:
        raise ValueError("delta and lambda_c must be nonnegative")
    D = 2.0 * delta / omega
    L = 2.0 * math.sqrt(2.0) * lambda_c / omega
    return ModelParams(
        omega=omega,
        delta=delta,
        lambda_c=lambda_c,
        D=D,
        L=L,
        alpha=L * L / (2.0 * D),
    )


def theta(params: ModelParams, q):
    """Effective field magnitude sqrt(D**2 + L**2 q**2); accepts arrays."""
    return (params.D**2 + (params.L * q) ** 2) ** 0.5


def w_minus(params: ModelParams, q):
    """Lower adiabatic surface q**2 - theta(q); accepts arrays."""
    return q * q - theta(params, q)


def w_minus_quartic(params: ModelParams, q):
    """Small-q expansion of the lower surface; accepts arrays.

    -D + (1 - alpha) q**2 + (alpha**2/(2 D)) q**4, accurate to 1e-8 for
    q <= 0.1 sqrt(D)/alpha. This truncation is what the scaled quartic
    eigenproblem solves exactly.
    """
    D, a = params.D, params.alpha
    q2 = q * q
    return -D + (1.0 - a) * q2 + (a * a / (2.0 * D)) * q2 * q2


def apes_eval(params: ModelParams, q: float) -> ApesPoint:
    """Evaluate both adiabatic surfaces at radius q >= 0."""
    if q < 0:
        raise ValueError(f"q must be nonnegative, got {q}")
    th = theta(params, q)
    return ApesPoint(q=q, theta=th, w_minus=q * q - th, w_plus=q * q + th)


def apes_minimum(params: ModelParams) -> tuple[float, float]:
    """Location and value of the lower-surface minimum.

    For alpha <= 1 the minimum sits at the origin with value -D. For
    alpha > 1 it sits on the circle q0 = sqrt((D/2)(alpha - 1/alpha)) with
    value -(D/2)(alpha + 1/alpha).
    """
    a = params.alpha
    if a <= 1.0:
        return 0.0, -params.D
    q0 = math.sqrt(0.5 * params.D * (a - 1.0 / a))
    return q0, -0.5 * params.D * (a + 1.0 / a)


def dressing(params: ModelParams, q: float) -> DressingPair:
    """Dressing amplitudes at radius q: a**2 = (1 - D/theta)/2, b**2 = (1 + D/theta)/2."""
    if q < 0:
        raise ValueError(f"q must be nonnegative, got {q}")
    r = params.D / theta(params, q)
    return DressingPair(a=math.sqrt(0.5 * (1.0 - r)), b=math.sqrt(0.5 * (1.0 + r)))


def lambda_components(
    params: ModelParams, q: float, lz_eigenvalue: float
) -> tuple[float, float, float, float]:
    """Rotated-frame derivative-coupling components at radius q.

    These are the terms dropped by the adiabatic factorization; they are
    diagnostics only and never enter the solver.

    Returns
    -------
    tuple of float
        (lambda0, lambda_x, lambda_y_coeff, lambda_z_coeff) where lambda0 is
        the scalar part, lambda_x is evaluated at the supplied angular
        eigenvalue, lambda_y_coeff multiplies d/dq, and lambda_z_coeff
        multiplies the angular momentum operator.
    """
    if q <= 0:
        raise ValueError("q must be positive, the components diverge at q = 0")
    D, L = params.D, params.L
    th = theta(params, q)
    lam0 = 0.25 * (1.0 / q**2 + (L * D) ** 2 / th**4)
    lam_x = -(L / (q * th)) * (lz_eigenvalue - (D / th) * (0.5 - (D / th) ** 2))
    lam_y = -D * L / th**2
    lam_z = -1.0 / q**2 + L**2 / (th * (th + D))
    return lam0, lam_x, lam_y, lam_z
