"""Ground-state solvers for the two-dimensional radial eigenproblem.

Two independent numerical routes are provided: a symmetric tridiagonal
finite-volume discretization solved by LAPACK bisection + inverse iteration,
and a Numerov shooting oracle used only for cross-validation. They share no
discretization machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .model import ModelParams, apes_minimum, w_minus

__all__ = [
    "RadialGrid",
    "RadialState",
    "CutoffError",
    "ConvergenceError",
    "BracketError",
    "default_grid",
    "scaled_grid",
    "tridiagonal_system",
    "solve_potential",
    "solve_physical",
    "solve_scaled",
    "numerov_oracle",
    "refine_potential",
    "refine_until",
    "refine_scaled",
]

N_BUDGET = 1 << 20
TAIL_FRACTION = 1e-6


class CutoffError(RuntimeError):
    """The domain cutoff q_max is too small: the wavefunction tail is not negligible."""


class ConvergenceError(RuntimeError):
    """Grid refinement exhausted its budget without meeting the tolerance."""


class BracketError(RuntimeError):
    """The shooting oracle failed to bracket the ground energy."""


@dataclass(frozen=True)
class RadialGrid:
    """Uniform half-offset radial grid on (0, q_max].

    Nodes sit at q_i = (i + 1/2) h, i = 0..n-1, with h = q_max/n, so the
    first node is h/2 and the coordinate singularity at q = 0 is never
    sampled. The Dirichlet wall sits just beyond the last node.
    """

    q_max: float
    n: int

    def __post_init__(self):
        if not self.q_max > 0:
            raise ValueError(f"q_max must be positive, got {self.q_max}")
        if self.n < 64:
            raise ValueError(f"n must be at least 64, got {self.n}")

    @property
    def h(self) -> float:
        return self.q_max / self.n

    @property
    def nodes(self) -> np.ndarray:
        return (np.arange(self.n) + 0.5) * self.h


@dataclass(frozen=True)
class RadialState:
    """Normalized radial ground state on a grid.

    phi holds the wavefunction samples phi(q_i), normalized so that
    int q phi(q)^2 dq = 1 under the midpoint rule, and globally nonnegative.
    energy is in units of omega/2. For scaled solves the coordinate is the
    scaled variable x instead of q.
    """

    grid: RadialGrid
    phi: np.ndarray
    energy: float
    j: float = field(default=-0.5)


def default_grid(params: ModelParams, n: int = 4096) -> RadialGrid:
    """Default physical grid: q_max = max(8, q0 + 8) covers all regimes."""
    q0, _ = apes_minimum(params)
    return RadialGrid(q_max=max(8.0, q0 + 8.0), n=n)


def scaled_grid(zeta: float = 0.0, n: int = 4096) -> RadialGrid:
    """Default grid for the scaled potential zeta x^2 + x^4.

    x_max = 6 suffices for |zeta| <= 5; for more negative zeta the well
    bottom x = sqrt(-zeta/2) shifts outward and the box follows it.
    """
    x_min = math.sqrt(max(-zeta, 0.0) / 2.0)
    return RadialGrid(q_max=max(6.0, x_min + 6.0), n=n)


def tridiagonal_system(
    potential: Callable[[np.ndarray], np.ndarray], grid: RadialGrid
) -> tuple[np.ndarray, np.ndarray]:
    """Symmetric tridiagonal representation of the radial operator.

    Finite-volume discretization of -(1/q) d/dq (q d/dq) + V on the
    half-offset nodes, symmetrized by the similarity diag(sqrt(q_i)); this
    is a discrete form of the substitution u = sqrt(q) phi.

    Returns
    -------
    (diag, off) : ndarray, ndarray
        Diagonal (length n) and subdiagonal (length n-1) of the matrix.
    """
    h = grid.h
    q = grid.nodes
    d = 2.0 / h**2 + potential(q)
    i = np.arange(1, grid.n)
    # face flux q_{i+1/2} = i*h over the geometric mean of the cell radii
    e = -i / (h**2 * np.sqrt((i - 0.5) * (i + 0.5)))
    return d, e


def solve_potential(
    potential: Callable[[np.ndarray], np.ndarray], grid: RadialGrid
) -> RadialState:
    """Ground state of [-d2/dq2 - (1/q) d/dq + V(q)] phi = eps phi on a grid.

    Parameters
    ----------
    potential : callable
        Vectorized V(q) evaluated on the grid nodes.
    grid : RadialGrid

    Raises
    ------
    CutoffError
        If the tail sample phi(q_{n-1}) is not below 1e-6 of the peak.
    ConvergenceError
        If the eigenvector is not nodeless beyond sign noise.
    """
    d, e = tridiagonal_system(potential, grid)
    w, v = eigh_tridiagonal(d, e, select="i", select_range=(0, 0))
    u = v[:, 0]
    if u[np.argmax(np.abs(u))] < 0:
        u = -u
    u = u / math.sqrt(float(np.sum(u * u)) * grid.h)
    phi = u / np.sqrt(grid.nodes)
    peak = float(phi.max())
    if np.any(phi < -1e-12 * peak):
        raise ConvergenceError("ground eigenvector has interior sign changes")
    # far-tail entries of the inverse-iteration vector carry sign noise at
    # ~1e-16 of the peak; fold it to keep the no-node sign convention
    np.abs(phi, out=phi)
    if phi[-1] >= TAIL_FRACTION * peak:
        raise CutoffError(
            f"tail phi(q_max) = {phi[-1]:.3e} exceeds {TAIL_FRACTION:g} of peak; "
            f"q_max = {grid.q_max:g} too small"
        )
    return RadialState(grid=grid, phi=phi, energy=float(w[0]))


def solve_physical(params: ModelParams, grid: RadialGrid | None = None) -> RadialState:
    """Ground state on the lower adiabatic surface W_-(q) = q^2 - Theta(q).

    The angular sector of the ground state carries no centrifugal term, so
    the radial operator is exactly -d2/dq2 - (1/q) d/dq + W_-(q).
    """
    if grid is None:
        grid = default_grid(params)
    return solve_potential(lambda q: w_minus(params, q), grid)


def solve_scaled(zeta: float, grid: RadialGrid | None = None) -> RadialState:
    """Ground state of the one-parameter family [-d2/dx2 - (1/x) d/dx + zeta x^2 + x^4]."""
    if grid is None:
        grid = scaled_grid(zeta)
    return solve_potential(lambda x: zeta * x * x + x**4, grid)


def _rk4_start(
    potential: Callable, energy: float, q_end: float, nsteps: int = 2000
) -> tuple[float, float, int]:
    """Integrate the regular branch phi' = z/q, z' = q (V - E) phi up to q_end.

    Startup for the shooting oracle: the regular solution behaves as
    phi -> const, z -> q^2 (V - E)/2 near the origin, which a fixed-step RK4
    handles without touching the 1/q^2 singular form.
    """
    q = q_end * 1e-8
    v0 = float(potential(q))
    phi, z = 1.0, 0.5 * q * q * (v0 - energy)
    h = (q_end - q) / nsteps
    nodes = 0

    def deriv(qq, y, w):
        return w / qq, qq * (float(potential(qq)) - energy) * y

    for _ in range(nsteps):
        k1p, k1z = deriv(q, phi, z)
        k2p, k2z = deriv(q + 0.5 * h, phi + 0.5 * h * k1p, z + 0.5 * h * k1z)
        k3p, k3z = deriv(q + 0.5 * h, phi + 0.5 * h * k2p, z + 0.5 * h * k2z)
        k4p, k4z = deriv(q + h, phi + h * k3p, z + h * k3z)
        phi_new = phi + h * (k1p + 2 * k2p + 2 * k3p + k4p) / 6.0
        z_new = z + h * (k1z + 2 * k2z + 2 * k3z + k4z) / 6.0
        if phi_new * phi < 0:
            nodes += 1
        phi, z = phi_new, z_new
        q += h
        if abs(phi) > 1e250:
            phi *= 1e-250
            z *= 1e-250
    return phi, z, nodes


def _numerov_march(
    c: np.ndarray, u0: float, u1: float, k1: int, k_end: int, step: int
) -> tuple[float, float, int]:
    """Three-term Numerov recursion from index k1 to k_end; counts sign changes."""
    up, uc = u0, u1
    nodes = 1 if u0 * u1 < 0 else 0
    k = k1
    while k != k_end:
        k += step
        un = ((12.0 - 10.0 * c[k - step]) * uc - c[k - 2 * step] * up) / c[k]
        if un == 0.0 or un * uc < 0.0:
            nodes += 1
        up, uc = uc, un
        if abs(uc) > 1e250:
            up *= 1e-250
            uc *= 1e-250
    return up, uc, nodes


def _oracle_eval(
    potential: Callable, q_max: float, n: int, energy: float
) -> tuple[int, float]:
    """Node count and matching Wronskian for a trial energy.

    Two-sided march on u = sqrt(q) phi with V_eff = V - 1/(4 q^2): outward
    from an RK4-started takeover radius, inward from the wall u(q_max) = 0,
    matched at the minimum of V_eff. The ground energy is the lowest E where
    the Wronskian changes sign with zero interior nodes.
    """
    h = q_max / n
    q = np.arange(1, n + 1) * h
    veff = potential(q) - 1.0 / (4.0 * q * q)
    c = np.concatenate([[1.0], 1.0 + h * h * (energy - veff) / 12.0])
    # takeover radius past the strongest 1/q^2 region, but well inside the box
    ks = max(2, min(int(math.ceil(1.0 / h)), n // 4))
    seg = np.arange(ks + 1, n - 1)
    m = int(seg[np.argmin(veff[seg - 1])])
    phi_a, _, nodes_rk = _rk4_start(potential, energy, ks * h)
    phi_b, _, _ = _rk4_start(potential, energy, (ks + 1) * h)
    u_out_m, u_out_m1, nodes_out = _numerov_march(
        c, math.sqrt(ks * h) * phi_a, math.sqrt((ks + 1) * h) * phi_b, ks + 1, m + 1, 1
    )
    u_in_m1, u_in_m, nodes_in = _numerov_march(c, 0.0, 1e-30, n - 1, m, -1)
    if u_out_m < 0:
        u_out_m, u_out_m1 = -u_out_m, -u_out_m1
    if u_in_m < 0:
        u_in_m, u_in_m1 = -u_in_m, -u_in_m1
    wronskian = u_out_m1 * u_in_m - u_in_m1 * u_out_m
    return nodes_rk + nodes_out + nodes_in, wronskian


def numerov_oracle(
    potential: Callable[[np.ndarray], np.ndarray],
    grid: RadialGrid,
    tol: float = 1e-11,
) -> float:
    """Ground energy by Numerov shooting; independent of the matrix solver.

    Parameters
    ----------
    potential : callable
        Vectorized V(q), the same bare potential the matrix solver takes;
        the 1/(4 q^2) effective term is applied internally.
    grid : RadialGrid
        Supplies the box size and the march resolution.
    tol : float
        Relative bisection width at which to stop.

    Raises
    ------
    BracketError
        If no sign change is found below the bracket growth limit.
    """
    q_max, n = grid.q_max, grid.n
    h = q_max / n
    q = np.arange(1, n + 1) * h
    # the ground energy is above min V: the effective radial kinetic term
    # -d2/dq2 - 1/(4 q^2) is nonnegative
    e_lo = float(np.min(potential(q))) - 1e-9
    span = 1.0
    while True:
        e_hi = e_lo + span
        nodes, wronskian = _oracle_eval(potential, q_max, n, e_hi)
        if nodes >= 1 or wronskian < 0.0:
            break
        span *= 2.0
        if span > 1e12:
            raise BracketError("no node or Wronskian sign change below bracket limit")
    for _ in range(200):
        e_mid = 0.5 * (e_lo + e_hi)
        if e_hi - e_lo <= tol * max(1.0, abs(e_mid)):
            return e_mid
        nodes, wronskian = _oracle_eval(potential, q_max, n, e_mid)
        if nodes >= 1 or wronskian < 0.0:
            e_hi = e_mid
        else:
            e_lo = e_mid
    return 0.5 * (e_lo + e_hi)


def refine_potential(
    potential: Callable[[np.ndarray], np.ndarray],
    grid: RadialGrid,
    tol: float = 1e-8,
) -> RadialState:
    """Refine a solve by grid doubling until successive energies agree.

    Doubles n until |eps(h) - eps(h/2)| < tol, extending q_max by 1.5x
    whenever the tail invariant fails. The eigensolver's absolute noise
    floor grows like machine-eps * (n/q_max)^2, so successive differences
    stop decreasing near 1e-8 on default-size boxes; when that plateau is
    reached the current state is returned rather than refining further, and
    tolerances below the floor are not reachable.

    Raises
    ------
    ConvergenceError
        If n exceeds 2**20 without convergence or plateau.
    """
    if tol < 1e-12:
        raise ValueError(f"tol must be at least 1e-12, got {tol}")
    q_max, n = grid.q_max, grid.n
    e_prev = None
    d_prev = math.inf
    while n <= N_BUDGET:
        try:
            state = solve_potential(potential, RadialGrid(q_max, n))
        except CutoffError:
            q_max *= 1.5
            e_prev, d_prev = None, math.inf
            continue
        if e_prev is not None:
            d = abs(state.energy - e_prev)
            if d < tol or (d >= d_prev and d < 1e-6):
                return state
            d_prev = d
        e_prev = state.energy
        n *= 2
    raise ConvergenceError(
        f"no convergence to tol = {tol:g} within n <= {N_BUDGET} at q_max = {q_max:g}"
    )


def refine_until(params: ModelParams, tol: float = 1e-8) -> RadialState:
    """Converged physical ground state at the given tolerance (see refine_potential)."""
    return refine_potential(lambda q: w_minus(params, q), default_grid(params), tol)


def refine_scaled(zeta: float, tol: float = 1e-8) -> RadialState:
    """Converged scaled ground state at the given tolerance (see refine_potential)."""
    return refine_potential(lambda x: zeta * x * x + x**4, scaled_grid(zeta), tol)
