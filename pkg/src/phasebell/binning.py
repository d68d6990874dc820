"""Reduce ``(s+1)``-outcome phase statistics to binary Up/Down outcomes."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .fock import CoefficientVector
from .phase import (RAW, RENORM, JointPhaseDistribution, Normalization, PhaseGrid,
                    lag_products, _clamp, _retained)


class SchemeKind(enum.Enum):
    EQUAL_SPLIT = "equal"
    SINGLE_STATE = "single"
    CUSTOM = "custom"


@dataclass(frozen=True)
class BinningScheme:
    """Outcomes ``mu`` in ``up_set`` read as Up, the rest as Down.  Both modes
    share the scheme."""

    kind: SchemeKind
    s: int
    up_set: frozenset[int]

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("binning needs at least two outcomes (s >= 1)")
        up = frozenset(int(m) for m in self.up_set)
        if not up:
            raise ValueError("up set is empty")
        if not up < frozenset(range(self.s + 1)):
            raise ValueError(f"up set must be a proper subset of 0..{self.s}, got {sorted(up)}")
        object.__setattr__(self, "up_set", up)

    @property
    def down_set(self) -> frozenset[int]:
        return frozenset(range(self.s + 1)) - self.up_set

    @property
    def label(self) -> str:
        if self.kind is SchemeKind.CUSTOM:
            return "custom:" + ",".join(str(m) for m in sorted(self.up_set))
        return self.kind.value

    def up_mask(self) -> np.ndarray:
        mask = np.zeros(self.s + 1, dtype=bool)
        mask[sorted(self.up_set)] = True
        return mask

    def complement(self) -> BinningScheme:
        return BinningScheme(SchemeKind.CUSTOM, self.s, self.down_set)


def make_scheme(kind: SchemeKind | str, s: int,
                custom_up: Iterable[int] | None = None) -> BinningScheme:
    """Build a scheme.  ``EQUAL_SPLIT`` puts ``0..(s-1)/2`` in Up for odd
    ``s`` and ``0..s/2-1`` for even ``s`` (the extra outcome goes Down);
    ``SINGLE_STATE`` puts only ``mu = 0`` in Up."""
    kind = SchemeKind(kind)
    if s < 1:
        raise ValueError("binning needs at least two outcomes (s >= 1)")
    if kind is SchemeKind.EQUAL_SPLIT:
        top = (s - 1) // 2 if s % 2 else s // 2 - 1
        up = range(top + 1)
    elif kind is SchemeKind.SINGLE_STATE:
        up = (0,)
    else:
        if custom_up is None:
            raise ValueError("custom scheme requires an up set")
        up = custom_up
    return BinningScheme(kind, s, frozenset(up))


def parse_scheme(text: str, s: int) -> BinningScheme:
    """Parse ``equal``, ``single`` or ``custom:0,1,4``."""
    text = text.strip()
    if text.startswith("custom:"):
        body = text[len("custom:"):]
        try:
            up = [int(tok) for tok in body.split(",") if tok.strip()]
        except ValueError:
            raise ValueError(f"bad custom scheme {text!r}") from None
        return make_scheme(SchemeKind.CUSTOM, s, up)
    if text in ("equal", "single"):
        return make_scheme(text, s)
    raise ValueError(f"unknown scheme {text!r}; use equal, single or custom:i,j,...")


@dataclass(frozen=True)
class BinaryJointTable:
    p_uu: float
    p_ud: float
    p_du: float
    p_dd: float
    p_u1: float
    p_u2: float
    total_mass: float
    psi0: float = 0.0


def bin_distribution(dist: JointPhaseDistribution, scheme: BinningScheme) -> BinaryJointTable:
    """Sum joint outcome probabilities over the Up/Down blocks."""
    if scheme.s != dist.s:
        raise ValueError(f"scheme built for s={scheme.s}, distribution has s={dist.s}")
    up = scheme.up_mask()
    dn = ~up
    t = dist.table

    def block(rows, cols):
        return math.fsum(t[np.ix_(rows, cols)].ravel())

    p_uu, p_ud = block(up, up), block(up, dn)
    p_du, p_dd = block(dn, up), block(dn, dn)
    return BinaryJointTable(
        p_uu, p_ud, p_du, p_dd,
        p_u1=math.fsum(t[up, :].ravel()),
        p_u2=math.fsum(t[:, up].ravel()),
        total_mass=dist.total_mass,
        psi0=dist.grid.psi0,
    )


def p_up_marginal(state: CoefficientVector, grid: PhaseGrid, scheme: BinningScheme,
                  mode: Normalization = RAW) -> float:
    frac = len(scheme.up_set) / (grid.s + 1)
    if mode is RENORM:
        return frac
    return frac * state.retained_mass(grid.s)


class BinnedCurves(NamedTuple):
    p_uu: np.ndarray
    p_ud: np.ndarray
    p_du: np.ndarray
    p_dd: np.ndarray


class BinaryModel:
    """Binary cell probabilities of one state and scheme as functions of ``psi0``.

    Summing the joint table over a block ``X x Y`` collapses to
    ``(A0 |X||Y| + 2 sum_d A_d Re[exp(-i d psi0) G_X(d) G_Y(d)]) / (s+1)**2``
    with ``A_d`` the lag products of the coefficients and
    ``G_X(d) = sum_{mu in X} exp(-2 pi i d mu / (s+1))``.  Cost is O(s) per
    angle instead of O(s**2) for building and summing the table.
    """

    def __init__(self, state: CoefficientVector, s: int, scheme: BinningScheme,
                 mode: Normalization = RAW):
        if scheme.s != s:
            raise ValueError(f"scheme built for s={scheme.s}, expected s={s}")
        self.s = s
        self.scheme = scheme
        self.mode = mode
        self.lags = lag_products(state.projected(s))
        self.d = np.arange(1, s + 1)
        up = np.array(sorted(scheme.up_set))
        dn = np.array(sorted(scheme.down_set))
        self.sizes = (up.size, dn.size)
        g_up = np.exp(-2j * np.pi * np.outer(self.d, up) / (s + 1)).sum(axis=1)
        g_dn = np.exp(-2j * np.pi * np.outer(self.d, dn) / (s + 1)).sum(axis=1)
        # weights per lag for the uu, ud, du, dd blocks
        self._g = (g_up * g_up, g_up * g_dn, g_dn * g_up, g_dn * g_dn)
        self.norm = float((s + 1) ** 2)
        if mode is RENORM:
            self.norm *= _retained(self.lags)
        frac = up.size / (s + 1)
        self.p_up = frac if mode is RENORM else frac * self.lags[0]

    def _cell(self, k: int, psi: np.ndarray, deriv: int) -> np.ndarray:
        phase = np.exp(-1j * np.multiply.outer(psi, self.d)) * self._g[k]
        if deriv:
            phase = phase * (-1j * self.d) ** deriv
            return 2.0 * (np.real(phase) @ self.lags[1:]) / self.norm
        nx = self.sizes[0] if k < 2 else self.sizes[1]
        ny = self.sizes[0] if k in (0, 2) else self.sizes[1]
        p = (self.lags[0] * nx * ny + 2.0 * (np.real(phase) @ self.lags[1:])) / self.norm
        return _clamp(p)

    def p_uu(self, psi0, deriv: int = 0) -> np.ndarray:
        return self._cell(0, np.asarray(psi0, dtype=float), deriv)

    def correlation(self, psi0, deriv: int = 0) -> np.ndarray:
        psi = np.asarray(psi0, dtype=float)
        uu, ud, du, dd = (self._cell(k, psi, deriv) for k in range(4))
        return uu + dd - ud - du

    def cells(self, psi0) -> BinnedCurves:
        psi = np.asarray(psi0, dtype=float)
        return BinnedCurves(*(self._cell(k, psi, 0) for k in range(4)))


def binned_curves(state: CoefficientVector, s: int, scheme: BinningScheme, psi0,
                  mode: Normalization = RAW) -> BinnedCurves:
    """Binary cell probabilities at one or many ``psi0`` values."""
    return BinaryModel(state, s, scheme, mode).cells(psi0)
