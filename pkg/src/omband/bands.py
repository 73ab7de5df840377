"""Hybridized band structure of the two-mode Bloch problem.

Diagonalizing the real symmetric block ``H(kd)`` gives two bands

    omega_pm(kd) = (Omega - xi)/2 +- r,      r = sqrt(g^2 + delta^2),

with ``delta = (Omega + xi)/2``.  The direct gap is ``2 r``, minimal
where the detuning-like quantity ``delta`` crosses zero (an avoided
crossing of width ``2|g|``).  The orthogonal eigenbasis

    A_k = u_A a_k + v_A b_k   (band omega_plus)
    B_k = u_B a_k + v_B b_k   (band omega_minus)

mixes photon (``a``) and phonon (``b``) amplitudes; ``alpha_X = u_X^2``
and ``beta_X = v_X^2`` are the photon and phonon weights of mode X.
Closed forms are used throughout -- the amplitudes are written so that
no catastrophic cancellation occurs for small ``g`` on either side of
the crossing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import LatticeParams, reduced_coeffs

__all__ = [
    "DegeneratePointError",
    "HybridBasis",
    "GapExtremum",
    "band_energies",
    "gap",
    "hybrid_basis",
    "band_scan",
    "gap_extrema",
    "BAND_SCAN_COLUMNS",
]


class DegeneratePointError(ValueError):
    """The two bands touch (g = 0 and delta = 0): no preferred eigenbasis."""


@dataclass(frozen=True)
class HybridBasis:
    """Eigen-decomposition of one Bloch block.

    ``omega_plus``/``omega_minus`` are the band energies, ``(u_X, v_X)``
    the real orthonormal eigenvector amplitudes, and ``alpha_X``,
    ``beta_X = 1 - alpha_X`` the photon/phonon weights.
    """

    omega_plus: float
    omega_minus: float
    u_A: float
    v_A: float
    u_B: float
    v_B: float
    alpha_A: float
    beta_A: float
    alpha_B: float
    beta_B: float

    @property
    def R(self) -> np.ndarray:
        """Rotation with rows (u_A, v_A), (u_B, v_B); R H R^T is diagonal."""
        return np.array([[self.u_A, self.v_A], [self.u_B, self.v_B]])


@dataclass(frozen=True)
class GapExtremum:
    """Local extremum of the direct gap.

    ``kind`` is ``"minimum"`` or ``"maximum"``; a completely flat gap is
    reported as a single record with ``kind=None`` and ``kd=nan``.
    """

    kd: float
    value: float
    kind: str | None


def band_energies(p: LatticeParams, kd: float) -> tuple[float, float]:
    """Return ``(omega_plus, omega_minus)`` at quasimomentum ``kd``."""
    rc = reduced_coeffs(p, kd)
    mid = 0.5 * (rc.Omega - rc.xi)
    r = math.hypot(p.g, rc.delta)
    return mid + r, mid - r


def gap(p: LatticeParams, kd: float) -> float:
    """Direct gap ``omega_plus - omega_minus = 2 sqrt(g^2 + delta^2)``."""
    rc = reduced_coeffs(p, kd)
    return 2.0 * math.hypot(p.g, rc.delta)


def hybrid_basis(p: LatticeParams, kd: float) -> HybridBasis:
    """Diagonalize the Bloch block at ``kd``.

    The eigenvector amplitudes are evaluated from whichever of the two
    algebraically equivalent forms of ``delta +- r`` is addition of
    same-sign quantities, so the weights stay accurate down to
    ``alpha ~ eps`` instead of losing half the digits near the band
    edges.  Raises :class:`DegeneratePointError` when ``g = 0`` and
    ``delta = 0`` simultaneously.
    """
    rc = reduced_coeffs(p, kd)
    g = p.g
    d = rc.delta
    r = math.hypot(g, d)
    if r == 0.0:
        raise DegeneratePointError(
            f"bands are degenerate at kd={kd!r} (g = 0 and delta = 0)"
        )
    mid = 0.5 * (rc.Omega - rc.xi)

    if g == 0.0:
        # decoupled limit: upper band is whichever bare mode lies higher
        if d > 0.0:
            u_A, v_A, u_B, v_B = 0.0, 1.0, -1.0, 0.0
        else:
            u_A, v_A, u_B, v_B = -1.0, 0.0, 0.0, -1.0
    else:
        dp = d + r if d >= 0.0 else (g * g) / (r - d)  # = delta + r
        dm = d - r if d <= 0.0 else -(g * g) / (r + d)  # = delta - r
        n_plus = math.hypot(g, dp)
        n_minus = math.hypot(g, dm)
        u_A, v_A = -g / n_plus, dp / n_plus
        u_B, v_B = -g / n_minus, dm / n_minus

    return HybridBasis(
        omega_plus=mid + r,
        omega_minus=mid - r,
        u_A=u_A,
        v_A=v_A,
        u_B=u_B,
        v_B=v_B,
        alpha_A=u_A * u_A,
        beta_A=v_A * v_A,
        alpha_B=u_B * u_B,
        beta_B=v_B * v_B,
    )


BAND_SCAN_COLUMNS = (
    "kd",
    "omega_plus",
    "omega_minus",
    "gap",
    "alpha_A",
    "beta_A",
    "alpha_B",
    "beta_B",
)


def band_scan(p: LatticeParams, n_k: int = 512) -> np.ndarray:
    """Tabulate bands and weights on an inclusive grid over [-pi, pi].

    Returns an ``(n_k, 8)`` array with columns :data:`BAND_SCAN_COLUMNS`
    in ascending ``kd``.  At an exactly degenerate point the four weight
    columns are NaN (the energies and the zero gap are still recorded).
    """
    if n_k < 2:
        raise ValueError(f"n_k must be at least 2, got {n_k}")
    kds = np.linspace(-math.pi, math.pi, n_k)
    out = np.empty((n_k, 8))
    for i, kd in enumerate(kds):
        wp, wm = band_energies(p, kd)
        try:
            hb = hybrid_basis(p, kd)
            weights = (hb.alpha_A, hb.beta_A, hb.alpha_B, hb.beta_B)
        except DegeneratePointError:
            weights = (math.nan,) * 4
        out[i] = (kd, wp, wm, wp - wm, *weights)
    return out


def _gap_grid(p: LatticeParams, kds: np.ndarray) -> np.ndarray:
    Omega = p.omega_m - 2.0 * p.K * np.cos(kds)
    xi = p.Delta + 2.0 * p.J * np.cos(kds + p.theta)
    return 2.0 * np.hypot(p.g, 0.5 * (Omega + xi))


_INVPHI = 0.5 * (math.sqrt(5.0) - 1.0)


def _golden_min(f, a: float, b: float, tol: float) -> float:
    """Golden-section minimum of a unimodal f on [a, b] to width tol."""
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def _fold_half_open(kd: float) -> float:
    r = math.remainder(kd, 2.0 * math.pi)
    if r >= math.pi:
        r -= 2.0 * math.pi
    return r


def gap_extrema(
    p: LatticeParams, n_k_coarse: int = 1024, refine_tol: float = 1e-6
) -> list[GapExtremum]:
    """Locate all local extrema of the gap over one Brillouin zone.

    A coarse scan on ``n_k_coarse`` points marks sign changes of the
    discrete slope; each bracket is then refined by golden-section
    search to a ``kd`` resolution of ``refine_tol``.  Since the gap
    profile is ``2 sqrt(g^2 + (c0 + A cos(kd + phi0))^2)`` there are at
    most two minima and two maxima; a flat profile (A = 0) yields the
    degenerate single record described in :class:`GapExtremum`.
    """
    if n_k_coarse < 64:
        raise ValueError(f"n_k_coarse must be at least 64, got {n_k_coarse}")
    h = 2.0 * math.pi / n_k_coarse
    xs = -math.pi + h * np.arange(n_k_coarse)
    vals = _gap_grid(p, xs)
    vmax = float(vals.max())
    vmin = float(vals.min())
    if vmax - vmin <= 1e-13 * max(1.0, abs(vmax)):
        return [GapExtremum(kd=math.nan, value=float(vals[0]), kind=None)]

    def f(x: float) -> float:
        return gap(p, x)

    found: list[GapExtremum] = []
    for i in range(n_k_coarse):
        left = vals[(i - 1) % n_k_coarse]
        mid = vals[i]
        right = vals[(i + 1) % n_k_coarse]
        x = xs[i]
        if mid < left and mid <= right:
            loc = _golden_min(f, x - h, x + h, refine_tol)
            found.append(
                GapExtremum(kd=_fold_half_open(loc), value=f(loc), kind="minimum")
            )
        elif mid > left and mid >= right:
            loc = _golden_min(lambda y: -f(y), x - h, x + h, refine_tol)
            found.append(
                GapExtremum(kd=_fold_half_open(loc), value=f(loc), kind="maximum")
            )
    found.sort(key=lambda e: e.kd)
    return found
