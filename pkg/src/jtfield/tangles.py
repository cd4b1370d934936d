"""Bipartite I-tangles and the I-residual tangle of the adiabatic ground state.

Every reduced density operator of the three-party (qubit, radial mode,
angular mode) ground state is fixed by the two Bloch components, so all
operations here take a BlochVector. A generic rank-2 evaluation path built
on the universal state inverter cross-validates every closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .observables import BlochVector

__all__ = [
    "RankTwoState",
    "TangleReport",
    "pure_tangle",
    "tangle_report",
    "rank2_from_bloch",
    "t_tensor",
    "t_tensor_closed",
    "m_matrix",
    "generic_rank2_tangle",
    "q_partition_tangle",
    "residual_average",
]

_SLACK = 1e-9


@dataclass(frozen=True)
class RankTwoState:
    """Spectral data of the rank-2 qubit/angular-mode reduced operator.

    p is the weight of the first eigenvector v1 = beta1|f1 up> + beta2|f2 dn>;
    the second, v2 = gamma1|f1 up> - gamma2|f2 dn>, carries weight 1 - p.
    The sign of the second component is part of the convention, so beta and
    gamma are stored as nonnegative pairs.
    """

    p: float
    beta: tuple[float, float]
    gamma: tuple[float, float]

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"weight p must lie in [0, 1], got {self.p}")
        for name, pair in (("beta", self.beta), ("gamma", self.gamma)):
            if abs(pair[0] ** 2 + pair[1] ** 2 - 1.0) > _SLACK:
                raise ValueError(f"{name} must be normalized, got {pair}")


@dataclass(frozen=True)
class TangleReport:
    """All six bipartite I-tangles plus the I-residual tangle.

    Partitions are named A_BC (party A vs the joint rest) and A_B (pairwise,
    rest traced out). tau_Eq and tau_phiq vanish identically; the qubit
    shares entanglement with the angular mode only.
    """

    tau_E_phiq: float
    tau_phi_Eq: float
    tau_q_Ephi: float
    tau_Ephi: float
    tau_Eq: float
    tau_phiq: float
    lambda_min_Ephi: float
    residual: float

    def __post_init__(self):
        for name in (
            "tau_E_phiq",
            "tau_phi_Eq",
            "tau_q_Ephi",
            "tau_Ephi",
            "tau_Eq",
            "tau_phiq",
            "residual",
        ):
            v = getattr(self, name)
            if not -_SLACK <= v <= 1.0 + _SLACK:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")
        if self.tau_Eq != 0.0 or self.tau_phiq != 0.0:
            raise ValueError("tau_Eq and tau_phiq must vanish identically")
        if not -0.5 - _SLACK <= self.lambda_min_Ephi <= _SLACK:
            raise ValueError(
                f"lambda_min_Ephi must lie in [-1/2, 0], got {self.lambda_min_Ephi}"
            )
        if self.tau_E_phiq - self.tau_Ephi < -1e-12:
            raise ValueError("monogamy violated: tau_E_phiq < tau_Ephi")


def pure_tangle(purity: float) -> float:
    """I-tangle of a bipartition of a joint pure state: 2(1 - purity).

    purity is Tr(rho_A^2) of either reduced operator.
    """
    if not 0.0 <= purity <= 1.0:
        raise ValueError(f"purity must lie in [0, 1], got {purity}")
    return 2.0 * (1.0 - purity)


def _lambda_min(b: BlochVector) -> float:
    s2 = b.norm_sq
    return 0.25 * (1.0 - math.sqrt(1.0 + 8.0 * b.b_z**2 / s2))


def tangle_report(b: BlochVector) -> TangleReport:
    """Closed-form tangles from the Bloch components.

    Raises
    ------
    ValueError
        At the degenerate origin b_z = b_phi = 0, where the mixed-state
        eigenvalue branch is a 0/0 form; unreachable for D > 0.
    """
    if b.norm_sq == 0.0:
        raise ValueError("degenerate input b_z = b_phi = 0")
    bz2 = b.b_z**2
    bp2 = b.b_phi**2
    lam = _lambda_min(b)
    # quadrature roundoff can push |b_z| a few ulp past 1; clamp at the
    # separable limit so reports stay in [0, 1]
    tau_single = max(0.0, 1.0 - bz2)
    tau_q = max(0.0, 1.0 - bz2 - bp2)
    tau_Ephi = 0.5 * tau_single * (1.0 + 2.0 * lam) + 0.5 * bp2 * (1.0 - 2.0 * lam)
    return TangleReport(
        tau_E_phiq=tau_single,
        tau_phi_Eq=tau_single,
        tau_q_Ephi=tau_q,
        tau_Ephi=tau_Ephi,
        tau_Eq=0.0,
        tau_phiq=0.0,
        lambda_min_Ephi=lam,
        residual=(2.0 / 3.0) * tau_q * (1.0 - lam),
    )


def rank2_from_bloch(b: BlochVector) -> RankTwoState:
    """Eigen-decomposition of the qubit/angular-mode reduced operator.

    Weights are (1 +/- s)/2 with s = |b|. The coefficient pairs follow from
    the 2x2 block on span{|f1 up>, |f2 dn>}: with x = b_z/b_phi and
    R = sqrt(1 + x^2), beta1 = [1 + (x+R)^2]^(-1/2), beta2 = (x+R) beta1,
    gamma1 = [1 + (R-x)^2]^(-1/2), gamma2 = (R-x) gamma1. At b_phi = 0 the
    block is diagonal and the eigenvectors reduce to the basis states.
    """
    if b.norm_sq == 0.0:
        raise ValueError("degenerate input b_z = b_phi = 0")
    s = math.sqrt(b.norm_sq)
    p = 0.5 * (1.0 + s)
    if b.b_phi == 0.0:
        return RankTwoState(p=p, beta=(0.0, 1.0), gamma=(1.0, 0.0))
    x = b.b_z / b.b_phi
    r = math.hypot(1.0, x)
    beta1 = 1.0 / math.sqrt(1.0 + (x + r) ** 2)
    gamma1 = 1.0 / math.sqrt(1.0 + (r - x) ** 2)
    return RankTwoState(
        p=p,
        beta=(beta1, (x + r) * beta1),
        gamma=(gamma1, (r - x) * gamma1),
    )


def _vectors(state: RankTwoState) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvectors as length-4 reals in the basis (f1 up, f1 dn, f2 up, f2 dn)."""
    b1, b2 = state.beta
    g1, g2 = state.gamma
    v1 = np.array([b1, 0.0, 0.0, b2])
    v2 = np.array([g1, 0.0, 0.0, -g2])
    return v1, v2


def _partial_traces(rho: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(rho_mode, rho_qubit) of a 4x4 operator ordered mode-major."""
    r = rho.reshape(2, 2, 2, 2)
    rho_mode = np.einsum("iaja->ij", r)
    rho_qubit = np.einsum("iaib->ab", r)
    return rho_mode, rho_qubit


def t_tensor(state: RankTwoState) -> np.ndarray:
    """Inverter overlap tensor T[i,j,k,l] by the direct four-term expansion.

    With gamma_ij = |v_i><v_j|, each entry is Tr(g_ij) Tr(g_kl)
    - Tr[tr_mode(g_ij) tr_mode(g_kl)] - Tr[tr_qubit(g_ij) tr_qubit(g_kl)]
    + Tr(g_ij g_kl). Indices run over the two eigenvectors.
    """
    v = _vectors(state)
    t = np.empty((2, 2, 2, 2))
    gs = [[np.outer(v[i], v[j]) for j in range(2)] for i in range(2)]
    for i in range(2):
        for j in range(2):
            gij = gs[i][j]
            mij, qij = _partial_traces(gij)
            for k in range(2):
                for l in range(2):
                    gkl = gs[k][l]
                    mkl, qkl = _partial_traces(gkl)
                    t[i, j, k, l] = (
                        np.trace(gij) * np.trace(gkl)
                        - np.trace(mij @ mkl)
                        - np.trace(qij @ qkl)
                        + np.trace(gij @ gkl)
                    )
    return t


def t_tensor_closed(state: RankTwoState) -> dict[tuple[int, int, int, int], float]:
    """Closed forms of the five independent T entries, keyed by 1-based indices."""
    b1, b2 = state.beta
    g1, g2 = state.gamma
    return {
        (1, 1, 1, 1): 4.0 * b1**2 * b2**2,
        (1, 1, 1, 2): -2.0 * (b1**3 * g1 - b2**3 * g2),
        (1, 1, 2, 2): 1.0 - 2.0 * (b1**2 * g1**2 + b2**2 * g2**2),
        (1, 2, 2, 2): -2.0 * (b1 * g1**3 - b2 * g2**3),
        (2, 2, 2, 2): 4.0 * g1**2 * g2**2,
    }


def m_matrix(b: BlochVector) -> tuple[np.ndarray, float]:
    """The symmetric 3x3 M matrix and the eigenvalue branch entering the tangle.

    Entries: M11 = b_z^2/s^2, M13 = M31 = b_z b_phi/s^2,
    M33 = (b_phi^2 - b_z^2)/s^2, all others zero, with s^2 = b_z^2 + b_phi^2.
    The returned eigenvalue is the closed-form branch
    (1 - sqrt(1 + 8 b_z^2/s^2))/4 that all tangle formulas use; a direct
    eigendecomposition of these entries reproduces it only at b_z = 0, so
    the two are deliberately not coupled here.
    """
    s2 = b.norm_sq
    if s2 == 0.0:
        raise ValueError("degenerate input b_z = b_phi = 0")
    m = np.zeros((3, 3))
    m[0, 0] = b.b_z**2 / s2
    m[0, 2] = m[2, 0] = b.b_z * b.b_phi / s2
    m[2, 2] = (b.b_phi**2 - b.b_z**2) / s2
    return m, _lambda_min(b)


def generic_rank2_tangle(state: RankTwoState, b: BlochVector) -> float:
    """I-tangle of the qubit/angular-mode pair by the generic rank-2 route.

    Builds the explicit 4x4 density operator from the eigen-data, evaluates
    Tr(rho rho~) = 1 - Tr(rho_A^2) - Tr(rho_B^2) + Tr(rho^2) with the
    universal-inverter tilde, and adds the mixedness correction
    2 lambda_min (1 - Tr rho^2). Must agree with tangle_report's closed form.

    Raises
    ------
    ValueError
        If state and b do not describe the same density operator.
    """
    v1, v2 = _vectors(state)
    rho = state.p * np.outer(v1, v1) + (1.0 - state.p) * np.outer(v2, v2)
    if (
        abs(rho[0, 0] - 0.5 * (1.0 + b.b_z)) > 1e-8
        or abs(rho[3, 3] - 0.5 * (1.0 - b.b_z)) > 1e-8
        or abs(rho[0, 3] + 0.5 * b.b_phi) > 1e-8
    ):
        raise ValueError("state and Bloch vector describe different operators")
    rho_mode, rho_qubit = _partial_traces(rho)
    purity = float(np.trace(rho @ rho))
    tr_rho_rhotilde = (
        1.0
        - float(np.trace(rho_mode @ rho_mode))
        - float(np.trace(rho_qubit @ rho_qubit))
        + purity
    )
    _, lam = m_matrix(b)
    return tr_rho_rhotilde + 2.0 * lam * (1.0 - purity)


def q_partition_tangle(b: BlochVector) -> float:
    """I-tangle of the radial mode with the qubit (or with the angular mode).

    Evaluates the same generic rank-2 expression on these partitions, where
    Tr(rho rho~) = (1 - s^2)/2, lambda_min = -(1 - s^2)/(2 (1 - b_z^2)) and
    1 - Tr(rho^2) = (1 - b_z^2)/2; the two terms cancel identically, so the
    radial mode is pairwise unentangled. Returns the (numerically zero) sum.
    """
    s2 = b.norm_sq
    mixedness = 0.5 * (1.0 - b.b_z**2)
    if mixedness == 0.0:
        return 0.0
    lam = -0.5 * (1.0 - s2) / (2.0 * mixedness)
    return 0.5 * (1.0 - s2) + 2.0 * lam * mixedness


def residual_average(report: TangleReport) -> float:
    """I-residual tangle: the average of the three one-vs-rest deficits.

    Each deficit is tau_A_BC minus the two pairwise tangles of A. Verifies
    the result equals the closed form (2/3) tau_q_Ephi (1 - lambda_min).

    Raises
    ------
    ValueError
        On a monogamy violation or a mismatch with the closed form, either
        of which signals an upstream bug.
    """
    d1 = report.tau_E_phiq - report.tau_Ephi - report.tau_Eq
    d2 = report.tau_phi_Eq - report.tau_Ephi - report.tau_phiq
    d3 = report.tau_q_Ephi - report.tau_Eq - report.tau_phiq
    if min(d1, d2, d3) < -1e-12:
        raise ValueError("monogamy violated in input report")
    avg = (d1 + d2 + d3) / 3.0
    closed = (2.0 / 3.0) * report.tau_q_Ephi * (1.0 - report.lambda_min_Ephi)
    if abs(avg - closed) > 1e-12:
        raise ValueError(
            f"residual average {avg} disagrees with closed form {closed}"
        )
    return avg
