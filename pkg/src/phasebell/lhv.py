"""Classical bounds from deterministic local hidden-variable strategies.

With two settings per side and binary outcomes the local polytope has 16
vertices: every assignment of Up/Down to the settings ``a, a', b, b'``.
Any local model is a convex mixture of them, so maximizing over the vertices
gives the exact local bounds of both functionals.
"""

from __future__ import annotations

import itertools
import math
from typing import NamedTuple, Sequence

import numpy as np

from .bell import correlation_e
from .binning import BinaryJointTable

UP, DOWN = True, False


class DeterministicStrategy(NamedTuple):
    a: bool
    a_p: bool
    b: bool
    b_p: bool


STRATEGIES: tuple[DeterministicStrategy, ...] = tuple(
    DeterministicStrategy(*bits) for bits in itertools.product((UP, DOWN), repeat=4)
)


def _product_table(x: bool, y: bool) -> BinaryJointTable:
    x, y = float(x), float(y)
    return BinaryJointTable(
        p_uu=x * y, p_ud=x * (1 - y), p_du=(1 - x) * y, p_dd=(1 - x) * (1 - y),
        p_u1=x, p_u2=y, total_mass=1.0,
    )


def strategy_tables(st: DeterministicStrategy) -> tuple[BinaryJointTable, ...]:
    """Tables for setting pairs ``(a,b), (a,b'), (a',b), (a',b')``."""
    return (_product_table(st.a, st.b), _product_table(st.a, st.b_p),
            _product_table(st.a_p, st.b), _product_table(st.a_p, st.b_p))


def _mix(tables: Sequence[Sequence[BinaryJointTable]], weights) -> list[BinaryJointTable]:
    out = []
    for k in range(4):
        cols = np.array([[t[k].p_uu, t[k].p_ud, t[k].p_du, t[k].p_dd, t[k].p_u1, t[k].p_u2]
                         for t in tables])
        m = weights @ cols
        out.append(BinaryJointTable(*map(float, m), total_mass=float(m[:4].sum())))
    return out


def spin_value(tables: Sequence[BinaryJointTable]) -> float:
    ab, abp, apb, apbp = tables
    return correlation_e(ab) - correlation_e(abp) + correlation_e(apb) + correlation_e(apbp)


def ch_parts(tables: Sequence[BinaryJointTable]) -> tuple[float, float]:
    """CH numerator and denominator ``P_up(a') + P_up(b)``."""
    ab, abp, apb, apbp = tables
    return ab.p_uu - abp.p_uu + apb.p_uu + apbp.p_uu, apb.p_u1 + ab.p_u2


def enumerate_lhv_bounds() -> tuple[float, float]:
    """Maxima of ``|B_S|`` and ``|B_CH|`` over the 16 vertices.  Strategies
    with a zero CH denominator are skipped for the CH maximum."""
    max_bs = 0.0
    max_ch = 0.0
    for st in STRATEGIES:
        tables = strategy_tables(st)
        max_bs = max(max_bs, abs(spin_value(tables)))
        num, den = ch_parts(tables)
        if den > 0:
            max_ch = max(max_ch, abs(num / den))
    return max_bs, max_ch


def mixture_check(weights) -> tuple[float, float, float]:
    """``(B_S, CH numerator, CH denominator)`` for a mixture of the 16
    strategies, weighted in ``STRATEGIES`` order."""
    w = np.asarray(weights, dtype=float)
    if w.shape != (len(STRATEGIES),):
        raise ValueError(f"expected {len(STRATEGIES)} weights, got shape {w.shape}")
    if np.any(w < 0) or not math.isclose(w.sum(), 1.0, abs_tol=1e-12):
        raise ValueError("weights must be nonnegative and sum to 1")
    mixed = _mix([strategy_tables(st) for st in STRATEGIES], w)
    num, den = ch_parts(mixed)
    return spin_value(mixed), num, den
