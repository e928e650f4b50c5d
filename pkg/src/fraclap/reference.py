"""Closed-form reference results: WKB levels and the exact fractional box.

These are used to validate the collocation spectra and to build comparison
tables; none of them involve the sampling bases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

# Lanczos approximation, g = 7, 9 coefficients; relative accuracy of
# ln_gamma is a few 1e-15 over the range used here.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def ln_gamma(x: float) -> float:
    """log Gamma(x) for x > 0, by the Lanczos series."""
    if not np.isfinite(x) or x <= 0:
        raise ParameterError(f"ln_gamma needs x > 0, got {x!r}")
    if x < 0.5:
        # reflection keeps the series argument away from the poles
        return math.log(math.pi / math.sin(math.pi * x)) - ln_gamma(1.0 - x)
    x -= 1.0
    series = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        series += c / (x + i)
    t = x + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * math.pi) + (x + 0.5) * math.log(t) - t + math.log(series)


def beta_function(a: float, b: float) -> float:
    """Euler beta B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)."""
    return math.exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b))


@dataclass(frozen=True)
class WkbModel:
    """Semiclassical model D |p|^alpha + q^2 |x|^beta."""

    alpha: float
    beta: float
    d_alpha: float = 1.0
    q: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("alpha", "beta", "d_alpha", "q", "hbar"):
            v = getattr(self, name)
            if not np.isfinite(v) or v <= 0:
                raise ParameterError(f"{name} must be positive, got {v!r}")

    @property
    def exponent(self) -> float:
        """Growth exponent alpha*beta / (alpha + beta) of the level sequence."""
        return self.alpha * self.beta / (self.alpha + self.beta)

    @property
    def prefactor(self) -> float:
        inner = (
            math.pi
            * self.hbar
            * self.beta
            * self.d_alpha ** (1.0 / self.alpha)
            * self.q ** (2.0 / self.beta)
            / (2.0 * beta_function(1.0 / self.beta, 1.0 / self.alpha + 1.0))
        )
        return inner ** self.exponent


def wkb_energy(model: WkbModel, n: int) -> float:
    """Semiclassical level n = 0, 1, 2, ... of the model."""
    if n < 0:
        raise ParameterError(f"level index must be >= 0, got {n!r}")
    return model.prefactor * (n + 0.5) ** model.exponent


def exact_box_energy(alpha: float, d_alpha: float, hbar: float, a: float, n: int) -> float:
    """Exact level D (hbar n pi / 2a)**alpha of the fractional infinite well.

    The well eigenfunctions do not depend on alpha, so the spectrum follows
    directly from the alpha = 2 one; modes are counted from n = 1.
    """
    if n < 1:
        raise ParameterError(f"box modes start at n = 1, got {n!r}")
    if a <= 0:
        raise ParameterError(f"half-width must be positive, got {a!r}")
    return d_alpha * (hbar * n * math.pi / (2.0 * a)) ** alpha


def box_eigenfunction(a: float, n: int, x: float) -> float:
    """Normalized infinite-well mode sin(n pi (x + a) / 2a) / sqrt(a)."""
    if n < 1:
        raise ParameterError(f"box modes start at n = 1, got {n!r}")
    if abs(x) > a:
        raise ParameterError(f"|x| = {abs(x)!r} exceeds the half-width {a!r}")
    return math.sin(n * math.pi * (x + a) / (2.0 * a)) / math.sqrt(a)
