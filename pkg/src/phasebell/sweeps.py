"""Parameter sweeps behind the ``sweep-s`` and ``sweep-lambda`` commands."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .bell import PSI_MAX, bell_ch_factorized, optimize_psi
from .binning import BinningScheme, parse_scheme
from .fock import CoefficientVector, circle_coeffs, equal_coeffs, tms_coeffs
from .phase import RAW, Normalization

STATE_FAMILIES = ("equal", "tms", "circle", "custom")


@dataclass(frozen=True)
class SweepSpec:
    state_family: str = "equal"
    s_values: tuple[int, ...] = (1,)
    scheme: str = "single"
    psi0_grid: int = 2000
    lambda_grid: int | None = None
    lam: float | None = None
    r: float | None = None
    coeffs: CoefficientVector | None = field(default=None, compare=False)
    mode: Normalization = RAW

    def __post_init__(self):
        if self.state_family not in STATE_FAMILIES:
            raise ValueError(f"unknown state family {self.state_family!r}")
        if not self.s_values:
            raise ValueError("at least one s value is required")
        if self.psi0_grid < 2:
            raise ValueError("psi0 grid needs at least 2 points")
        if self.lambda_grid is not None and self.lambda_grid < 2:
            raise ValueError("lambda grid needs at least 2 points")

    def state(self, s: int, lam: float | None = None) -> CoefficientVector:
        """State fed to a resolution-``s`` measurement (``s + 1`` terms)."""
        fam = self.state_family
        if fam == "equal":
            return equal_coeffs(s)
        if fam == "tms":
            lam = self.lam if lam is None else lam
            if lam is None:
                raise ValueError("tms state needs --lambda")
            return tms_coeffs(lam, s + 1)
        if fam == "circle":
            if self.r is None:
                raise ValueError("circle state needs --r")
            return circle_coeffs(self.r, s + 1)
        if self.coeffs is None:
            raise ValueError("custom state needs --coeffs")
        return self.coeffs

    def binning(self, s: int) -> BinningScheme:
        return parse_scheme(self.scheme, s)


def psi_grid(points: int) -> np.ndarray:
    return np.linspace(0.0, PSI_MAX, points)


def lambda_values(points: int) -> np.ndarray:
    """``i / points`` for ``i = 0..points-1``: evenly spaced on ``[0, 1)``."""
    return np.arange(points) / points


def _sweep_s_row(spec: SweepSpec, s: int) -> tuple[int, float, float]:
    ev = optimize_psi(spec.state(s), s, spec.binning(s), "ch", spec.mode, spec.psi0_grid)
    return s, ev.psi0, ev.b_ch


def sweep_s(spec: SweepSpec, jobs: int = 1) -> list[tuple[int, float, float]]:
    """Rows ``(s, psi0_opt, b_ch_max)`` in ascending ``s``."""
    s_values = sorted(set(spec.s_values))
    return _map(_sweep_s_row, spec, s_values, jobs)


def _sweep_lambda_rows(spec: SweepSpec, s: int) -> list[tuple[int, float, float, float]]:
    psi = psi_grid(spec.psi0_grid)
    scheme = spec.binning(s)
    rows = []
    for lam in lambda_values(spec.lambda_grid or 200):
        b = bell_ch_factorized(spec.state(s, float(lam)), s, scheme, psi, spec.mode)
        rows.extend((s, float(lam), float(p), float(v)) for p, v in zip(psi, b))
    return rows


def sweep_lambda(spec: SweepSpec, jobs: int = 1) -> list[tuple[int, float, float, float]]:
    """Rows ``(s, lambda, psi0, b_ch)`` over the (lambda, psi0) grid of a
    two-mode squeezed state."""
    if spec.state_family != "tms":
        raise ValueError("sweep-lambda requires the tms state family")
    s_values = sorted(set(spec.s_values))
    return [row for block in _map(_sweep_lambda_rows, spec, s_values, jobs) for row in block]


def island_fraction(b_ch: Iterable[float]) -> float:
    """Fraction of grid points where the CH ratio exceeds 1."""
    b = np.fromiter(b_ch, dtype=float)
    return float(np.mean(b > 1.0))


def _map(fn, spec: SweepSpec, s_values: Sequence[int], jobs: int):
    if jobs <= 1 or len(s_values) == 1:
        return [fn(spec, s) for s in s_values]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map() yields in submission order, so output stays sorted by s
        return list(pool.map(fn, [spec] * len(s_values), s_values))
