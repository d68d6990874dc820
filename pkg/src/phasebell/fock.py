"""Coefficient generators for two-mode correlated photon-number states.

A correlated pair state is ``sum_n c_n |n>|n>`` with real ``c_n``.  Every
generator returns a :class:`CoefficientVector` that keeps the raw squared
norm next to the coefficients, so truncation losses stay visible.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from os import PathLike
from typing import Iterable

import numpy as np

NORM_TOL = 1e-12


class Source(enum.Enum):
    EQUAL = "equal"
    TWO_MODE_SQUEEZED = "tms"
    CIRCLE = "circle"
    CUSTOM = "custom"


@dataclass(frozen=True)
class CoefficientVector:
    """Real amplitudes ``c_n`` indexed by photon number ``n``.

    ``raw_norm_sq`` is the sum of squares *before* any renormalization the
    generator applied; ``norm_sq`` is the sum of squares of ``coeffs``.
    """

    coeffs: np.ndarray
    source: Source
    raw_norm_sq: float
    norm_sq: float = field(init=False)

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "norm_sq", math.fsum(c * c))

    def __len__(self):
        return self.coeffs.size

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm_sq - 1.0) < NORM_TOL

    def projected(self, s: int) -> np.ndarray:
        """Coefficients for ``n = 0..s``; missing entries are zero."""
        out = np.zeros(s + 1)
        k = min(s + 1, self.coeffs.size)
        out[:k] = self.coeffs[:k]
        return out

    def retained_mass(self, s: int) -> float:
        c = self.projected(s)
        return math.fsum(c * c)


def _normalized(values: np.ndarray) -> tuple[np.ndarray, float]:
    raw = math.fsum(values * values)
    if raw == 0.0:
        raise ValueError("cannot normalize an all-zero coefficient vector")
    return values / math.sqrt(raw), raw


def equal_coeffs(s: int) -> CoefficientVector:
    """Equal superposition of ``|0>|0> .. |s>|s>``."""
    if s < 0:
        raise ValueError(f"s must be >= 0, got {s}")
    c = np.full(s + 1, 1.0 / math.sqrt(s + 1))
    return CoefficientVector(c, Source.EQUAL, math.fsum(c * c))


def tms_coeffs(lam: float, count: int, normalize: bool = False) -> CoefficientVector:
    """Two-mode squeezed vacuum, ``c_n = sqrt(1 - lam**2) * lam**n``.

    ``lam`` is ``tanh`` of the squeezing parameter, so ``lam = 0`` is the
    vacuum and ``lam -> 1`` approaches an equal-weight superposition.  The
    geometric ratio ``c[n+1] / c[n] = lam`` is built in by recurrence.
    """
    if not (0.0 <= lam < 1.0):
        raise ValueError(f"lambda must lie in [0, 1), got {lam}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    c = np.empty(count)
    c[0] = math.sqrt(1.0 - lam * lam)
    for n in range(1, count):
        c[n] = c[n - 1] * lam
    raw = math.fsum(c * c)
    if normalize:
        c, raw = _normalized(c)
    return CoefficientVector(c, Source.TWO_MODE_SQUEEZED, raw)


def circle_unnormalized(r: float, count: int) -> np.ndarray:
    """Shape ``r**(2n) / n!`` of the circle-state amplitudes."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    r2 = r * r
    t = np.empty(count)
    t[0] = 1.0
    for n in range(1, count):
        t[n] = t[n - 1] * r2 / n
    return t


def circle_coeffs(r: float, count: int) -> CoefficientVector:
    """Circle state amplitudes, renormalized over the first ``count`` terms.

    ``raw_norm_sq`` is the squared norm of the unnormalized shape, which
    converges to ``I0(2 r**2)`` as ``count`` grows.
    """
    t = circle_unnormalized(r, count)
    c, raw = _normalized(t)
    return CoefficientVector(c, Source.CIRCLE, raw)


def custom_coeffs(values: Iterable[float]) -> CoefficientVector:
    """Wrap user coefficients verbatim.  A non-unit norm is reported via
    ``is_normalized`` and left untouched."""
    c = np.asarray(list(values), dtype=float)
    if c.size == 0:
        raise ValueError("at least one coefficient is required")
    if not np.all(np.isfinite(c)):
        raise ValueError("coefficients must be finite")
    return CoefficientVector(c, Source.CUSTOM, math.fsum(c * c))


def read_coeff_file(path: str | PathLike) -> CoefficientVector:
    """One decimal coefficient per line; blank lines and ``#`` comments skipped."""
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            try:
                values.append(float(text))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: not a number: {text!r}") from None
    return custom_coeffs(values)


def bessel_i0(x: float, tol: float = 1e-12) -> float:
    """Modified Bessel function ``I0(x)`` by its power series.

    Terms ``(x/2)**(2k) / (k!)**2`` are added until the next one falls below
    ``tol`` times the partial sum.
    """
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    q = 0.25 * x * x
    term = 1.0
    total = 1.0
    k = 0
    while True:
        k += 1
        term *= q / (k * k)
        if term < tol * total:
            return total
        total += term
