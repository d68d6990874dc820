"""Joint and marginal statistics of discrete phase measurements.

Each mode is measured in the ``s + 1`` orthonormal phase states
``|theta_mu> = (s+1)**-1/2 sum_n exp(i n theta_mu) |n>`` with
``theta_mu = theta0 + 2 pi mu / (s+1)``.  On a correlated pair state the
joint outcome probability depends on the two reference phases only through
``psi0 = theta0_1 + theta0_2`` and on the outcomes only through
``(mu1 + mu2) mod (s+1)``.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass
from typing import TextIO

import numpy as np

from .fock import CoefficientVector

CLAMP_TOL = 1e-14


class Normalization(enum.Enum):
    """How probabilities treat norm lost when projecting onto ``n <= s``."""

    PROJECTED_RAW = "raw"
    RENORMALIZED = "renorm"


RAW = Normalization.PROJECTED_RAW
RENORM = Normalization.RENORMALIZED


@dataclass(frozen=True)
class PhaseGrid:
    s: int
    theta0_1: float = 0.0
    theta0_2: float = 0.0

    def __post_init__(self):
        if self.s < 0:
            raise ValueError(f"s must be >= 0, got {self.s}")

    @classmethod
    def from_psi0(cls, s: int, psi0: float) -> PhaseGrid:
        return cls(s, psi0, 0.0)

    @property
    def n_outcomes(self) -> int:
        return self.s + 1

    @property
    def psi0(self) -> float:
        return self.theta0_1 + self.theta0_2

    def phases(self, mode: int = 1) -> np.ndarray:
        """Outcome phases ``theta_mu`` for mode 1 or 2."""
        theta0 = self.theta0_1 if mode == 1 else self.theta0_2
        return theta0 + 2.0 * np.pi * np.arange(self.s + 1) / (self.s + 1)


def lag_products(c: np.ndarray) -> np.ndarray:
    """``A[d] = sum_n c[n] c[n-d]`` for ``d = 0..len(c)-1`` (compensated sums)."""
    m = c.size
    return np.array([math.fsum(c[d:] * c[: m - d]) for d in range(m)])


def _retained(lags: np.ndarray) -> float:
    if lags[0] == 0.0:
        raise ZeroDivisionError("state has no support on n <= s; cannot renormalize")
    return lags[0]


def _clamp(p):
    p = np.asarray(p, dtype=float)
    if np.any(p <= -CLAMP_TOL):
        raise ValueError(f"negative probability {p.min():.3e} beyond rounding")
    return np.where(p < 0.0, 0.0, p)


def _check_index(mu: int, s: int):
    if not (0 <= mu <= s):
        raise IndexError(f"outcome index {mu} outside 0..{s}")


def residue_probs(state: CoefficientVector, s: int, psi0, mode=RAW) -> np.ndarray:
    """Joint probability for each residue ``k = (mu1 + mu2) mod (s+1)``.

    ``psi0`` may be an array; the result then has shape ``psi0.shape + (s+1,)``.
    """
    c = state.projected(s)
    lags = lag_products(c)
    psi = np.asarray(psi0, dtype=float)
    k = np.arange(s + 1)
    d = np.arange(1, s + 1)
    angle = 2.0 * np.pi * k / (s + 1) + psi[..., None]
    cross = np.cos(angle[..., None] * d) @ lags[1:]
    p = (lags[0] + 2.0 * cross) / (s + 1) ** 2
    if mode is RENORM:
        p = p / _retained(lags)
    return _clamp(p)


def joint_prob(state: CoefficientVector, grid: PhaseGrid, mu1: int, mu2: int,
               mode: Normalization = RAW) -> float:
    """Probability of outcomes ``(mu1, mu2)``, summing the pair-interference
    terms grouped by photon-number difference."""
    s = grid.s
    _check_index(mu1, s)
    _check_index(mu2, s)
    c = state.projected(s)
    lags = lag_products(c)
    k = (mu1 + mu2) % (s + 1)
    angle = 2.0 * math.pi * k / (s + 1) + grid.psi0
    cross = math.fsum(lags[d] * math.cos(d * angle) for d in range(1, s + 1))
    p = (lags[0] + 2.0 * cross) / (s + 1) ** 2
    if mode is RENORM:
        p /= _retained(lags)
    return float(_clamp(p))


def oracle_joint_prob(state: CoefficientVector, grid: PhaseGrid, mu1: int, mu2: int) -> float:
    """``|<theta_mu1|<theta_mu2|Psi>|**2`` from the complex amplitude directly."""
    s = grid.s
    _check_index(mu1, s)
    _check_index(mu2, s)
    c = state.projected(s)
    total_phase = grid.phases(1)[mu1] + grid.phases(2)[mu2]
    n = np.arange(s + 1)
    amp = np.sum(c * np.exp(-1j * n * total_phase)) / (s + 1)
    return float(abs(amp) ** 2)


def marginal_prob(state: CoefficientVector, grid: PhaseGrid, mode: Normalization = RAW) -> float:
    """Single-mode outcome probability; the same for every outcome and angle."""
    if mode is RENORM:
        return 1.0 / (grid.s + 1)
    return state.retained_mass(grid.s) / (grid.s + 1)


@dataclass(frozen=True)
class JointPhaseDistribution:
    grid: PhaseGrid
    table: np.ndarray
    total_mass: float
    mode: Normalization

    @property
    def s(self) -> int:
        return self.grid.s

    def marginal(self, mode: int = 1) -> np.ndarray:
        return self.table.sum(axis=1 if mode == 1 else 0)

    def to_csv(self, fh: TextIO):
        """Write ``mu1,mu2,p`` rows with 17 significant digits."""
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["mu1", "mu2", "p"])
        for mu1 in range(self.s + 1):
            for mu2 in range(self.s + 1):
                w.writerow([mu1, mu2, f"{self.table[mu1, mu2]:.17g}"])


def joint_distribution(state: CoefficientVector, grid: PhaseGrid,
                       mode: Normalization = RAW) -> JointPhaseDistribution:
    s = grid.s
    per_residue = residue_probs(state, s, grid.psi0, mode)
    idx = np.add.outer(np.arange(s + 1), np.arange(s + 1)) % (s + 1)
    table = per_residue[idx]
    table.setflags(write=False)
    return JointPhaseDistribution(grid, table, math.fsum(table.ravel()), mode)
