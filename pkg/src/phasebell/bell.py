"""Clauser-Horne and spin Bell functionals on binned phase measurements.

The factorized forms take a single angle ``psi`` and evaluate

    B_CH = [2 P_uu(psi) + P_uu(-psi) - P_uu(3 psi)] / (2 P_up)
    B_S  = 2 E(psi) + E(-psi) - E(3 psi)

which are the four-setting functionals at reference phases
``theta1 = 0, theta1' = -2 psi, theta2 = psi, theta2' = 3 psi``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from scipy.optimize import brentq

from .binning import BinaryJointTable, BinaryModel, BinningScheme, bin_distribution
from .fock import CoefficientVector
from .phase import RAW, Normalization, PhaseGrid, joint_distribution

PSI_MAX = 2.0 * math.pi / 3.0
CH_BOUND = 1.0
S_BOUND = 2.0

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class Functional(enum.Enum):
    CH = "ch"
    S = "s"


class ZeroMarginalError(ZeroDivisionError):
    """The Up marginal vanishes, so the CH ratio is undefined."""


@dataclass(frozen=True)
class AngleSet:
    theta1: float
    theta1p: float
    theta2: float
    theta2p: float

    def __post_init__(self):
        if not all(map(math.isfinite, (self.theta1, self.theta1p, self.theta2, self.theta2p))):
            raise ValueError("angles must be finite")

    @classmethod
    def factorized(cls, psi: float) -> AngleSet:
        # sums: (1,2)=psi, (1,2')=3psi, (1',2)=-psi, (1',2')=psi
        return cls(0.0, -2.0 * psi, psi, 3.0 * psi)


@dataclass(frozen=True)
class BellEvaluation:
    b_ch: float
    b_s: float
    psi0: float
    mode: Normalization = RAW
    angles: AngleSet | None = None

    @property
    def violates_ch(self) -> bool:
        return abs(self.b_ch) > CH_BOUND

    @property
    def violates_s(self) -> bool:
        return abs(self.b_s) > S_BOUND


def correlation_e(table: BinaryJointTable) -> float:
    return table.p_uu + table.p_dd - table.p_ud - table.p_du


def _scalar(x):
    x = np.asarray(x)
    return float(x) if x.ndim == 0 else x


def _ch(model: BinaryModel, psi, deriv: int = 0):
    if model.p_up <= 0.0:
        raise ZeroMarginalError("Up marginal is zero; state has no weight on n <= s")
    p = model.p_uu
    if deriv:
        return (2.0 * p(psi, 1) - p(-psi, 1) - 3.0 * p(3.0 * psi, 1)) / (2.0 * model.p_up)
    return (2.0 * p(psi) + p(-psi) - p(3.0 * psi)) / (2.0 * model.p_up)


def _spin(model: BinaryModel, psi, deriv: int = 0):
    e = model.correlation
    if deriv:
        return 2.0 * e(psi, 1) - e(-psi, 1) - 3.0 * e(3.0 * psi, 1)
    return 2.0 * e(psi) + e(-psi) - e(3.0 * psi)


def bell_ch_factorized(state: CoefficientVector, s: int, scheme: BinningScheme, psi0,
                       mode: Normalization = RAW):
    """CH ratio at the factorized angle ``psi0`` (scalar or array)."""
    model = BinaryModel(state, s, scheme, mode)
    return _scalar(_ch(model, np.asarray(psi0, dtype=float)))


def bell_s_factorized(state: CoefficientVector, s: int, scheme: BinningScheme, psi0,
                      mode: Normalization = RAW):
    model = BinaryModel(state, s, scheme, mode)
    return _scalar(_spin(model, np.asarray(psi0, dtype=float)))


def _tables(state, s, scheme, angles: AngleSet, mode):
    def table(t1, t2):
        return bin_distribution(joint_distribution(state, PhaseGrid(s, t1, t2), mode), scheme)

    return (table(angles.theta1, angles.theta2), table(angles.theta1, angles.theta2p),
            table(angles.theta1p, angles.theta2), table(angles.theta1p, angles.theta2p))


def bell_ch_general(state: CoefficientVector, s: int, scheme: BinningScheme,
                    angles: AngleSet, mode: Normalization = RAW) -> float:
    """Four-setting CH ratio from four independently built joint tables."""
    ab, abp, apb, apbp = _tables(state, s, scheme, angles, mode)
    den = apb.p_u1 + ab.p_u2
    if den <= 0.0:
        raise ZeroMarginalError("CH denominator is zero")
    return (ab.p_uu - abp.p_uu + apb.p_uu + apbp.p_uu) / den


def bell_s_general(state: CoefficientVector, s: int, scheme: BinningScheme,
                   angles: AngleSet, mode: Normalization = RAW) -> float:
    ab, abp, apb, apbp = _tables(state, s, scheme, angles, mode)
    e = correlation_e
    return e(ab) - e(abp) + e(apb) + e(apbp)


def golden_section_max(f: Callable[[float], float], a: float, b: float,
                       tol: float = 1e-10) -> tuple[float, float]:
    """Maximize a unimodal ``f`` on ``[a, b]``; returns ``(x, f(x))``."""
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def optimize_psi(state: CoefficientVector, s: int, scheme: BinningScheme,
                 functional: Functional | str = Functional.CH, mode: Normalization = RAW,
                 grid_points: int = 2000, tol: float = 1e-10) -> BellEvaluation:
    """Maximize a factorized functional over ``psi0`` in ``[0, 2 pi / 3]``.

    A dense grid picks the best point (smallest ``psi0`` on ties), then
    golden-section search refines inside the neighbouring grid cells.  Near a
    smooth peak function values stop resolving the argmax below ~1e-8, so an
    interior optimum is finally polished as the root of the analytic
    derivative.
    """
    functional = Functional(functional)
    model = BinaryModel(state, s, scheme, mode)
    fn = _ch if functional is Functional.CH else _spin
    f = lambda p: float(fn(model, p))
    grid = np.linspace(0.0, PSI_MAX, grid_points)
    values = fn(model, grid)
    i = int(np.argmax(values))
    best_psi, best_val = float(grid[i]), float(values[i])
    lo, hi = float(grid[max(i - 1, 0)]), float(grid[min(i + 1, grid_points - 1)])
    x, fx = golden_section_max(f, lo, hi, tol)
    if fx > best_val:
        best_psi, best_val = x, fx
    slope = lambda p: float(fn(model, p, 1))
    if slope(lo) > 0.0 > slope(hi):
        root = brentq(slope, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)
        if f(root) >= best_val - 1e-14:
            best_psi = root
    return evaluate(state, s, scheme, best_psi, mode)


def evaluate(state: CoefficientVector, s: int, scheme: BinningScheme, psi0: float,
             mode: Normalization = RAW) -> BellEvaluation:
    return BellEvaluation(
        b_ch=bell_ch_factorized(state, s, scheme, psi0, mode),
        b_s=bell_s_factorized(state, s, scheme, psi0, mode),
        psi0=float(psi0),
        mode=mode,
        angles=AngleSet.factorized(psi0),
    )


def ch_closed_form(state: CoefficientVector, s: int, psi0: float) -> float:
    """Single-state-binning CH ratio written out as a pair sum:
    ``1/(s+1) + sum_{n>n'} c_n c_n' [3 cos(dn psi) - cos(3 dn psi)] / ((s+1) sum c_m**2)``.
    """
    c = state.projected(s)
    mass = math.fsum(c * c)
    terms = []
    for n in range(s + 1):
        for m in range(n):
            dn = n - m
            terms.append(c[n] * c[m] * (3.0 * math.cos(dn * psi0) - math.cos(3.0 * dn * psi0)))
    return 1.0 / (s + 1) + math.fsum(terms) / ((s + 1) * mass)


def ch_printed_closed_form(state: CoefficientVector, s: int, psi0: float) -> float:
    """The same pair sum with prefactor ``2/(s+1)`` and divisor
    ``sqrt(sum c_m**2)``; kept to show it disagrees with direct probabilities."""
    c = state.projected(s)
    root = math.sqrt(math.fsum(c * c))
    total = math.fsum(
        c[n] * c[m] * (3.0 * math.cos((n - m) * psi0) - math.cos(3.0 * (n - m) * psi0))
        for n in range(s + 1) for m in range(n)
    )
    return 1.0 / (s + 1) + 2.0 / (s + 1) * total / root
