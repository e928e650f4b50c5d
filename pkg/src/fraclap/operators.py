"""Dense collocation matrices of spectral multipliers m(p) on LSF grids.

Two assembly routes are provided.  ``multiplier_matrix`` evaluates the
generic complex sum over the exponential expansion and works for any finite
real multiplier.  ``fractional_laplacian_matrix`` (and, internally, any even
multiplier) uses the real trigonometric closed forms specific to each basis
kind; these are assembled in extended precision because the Mathieu and
oscillator benchmarks need entries good to well below 1e-12 even when the
largest momenta contribute terms of order N**alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .basis import BasisKind, Grid, SpectralCoefficients, _exponential_table
from .errors import MultiplierDomainError, NumericalError, ParameterError

_LD = np.longdouble
_PI = _LD(np.pi)


@dataclass(frozen=True)
class SpectralMultiplier:
    """A real scalar function applied to the momentum spectrum."""

    symbol: Callable[[float], float]
    label: str = ""


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense real matrix of an operator on a sampling grid."""

    grid: Grid
    entries: np.ndarray
    label: str = ""

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def _as_multiplier(m) -> SpectralMultiplier:
    if isinstance(m, SpectralMultiplier):
        return m
    return SpectralMultiplier(symbol=m)


def multiplier_matrix(coeffs: SpectralCoefficients, m) -> OperatorMatrix:
    """Collocation matrix of m(p) through the exponential expansion.

    Entry (k, j) is sum_n C_n(k, N) m(n pi / 2L) exp(i n pi x_j / 2L); the
    imaginary parts must cancel and are dropped after a residue check.
    """
    m = _as_multiplier(m)
    grid = coeffs.grid
    momenta = coeffs.n_values * np.pi / (2.0 * grid.L)
    values = np.empty(len(momenta))
    for i, p in enumerate(momenta):
        v = m.symbol(p)
        if np.iscomplexobj(v) or not np.isfinite(v):
            raise MultiplierDomainError(p, v)
        values[i] = v

    table = _exponential_table(coeffs, grid.points)
    raw = (coeffs.values * values[None, :]) @ table
    scale = max(1.0, float(np.abs(raw).max()))
    resid = float(np.abs(raw.imag).max())
    if resid > 1e-12 * scale:
        raise NumericalError(
            f"imaginary residue {resid:.3e} left after multiplier assembly"
        )
    label = m.label or "m(p)"
    return OperatorMatrix(grid=grid, entries=np.ascontiguousarray(raw.real), label=label)


def _even_closed_form(grid: Grid, m_of_p: Callable, label: str) -> OperatorMatrix:
    """Real closed-form assembly for a multiplier that is even in p.

    Exploits the pairing of +n and -n terms, which leaves cosine sums in
    (k - j) and, for the Dirichlet and Neumann sets, (k + j).  All sums run
    in 80-bit extended precision; the result is returned as float64.
    """
    N = grid.N
    L = _LD(grid.L)
    k = grid.indices
    K, J = np.meshgrid(k, k, indexing="ij")

    if grid.kind == BasisKind.PERIODIC:
        r = np.arange(1, N + 1, dtype=_LD)
        mr = np.asarray(m_of_p(r * _PI / L), dtype=_LD)
        d = np.arange(-2 * N, 2 * N + 1, dtype=_LD)
        T = np.cos(np.outer(d, r) * 2 * _PI / (2 * N + 1)) @ mr * 2 / (2 * N + 1)
        M = T[(K - J) + 2 * N] + _LD(m_of_p(_LD(0))) / (2 * N + 1)
    elif grid.kind == BasisKind.DIRICHLET:
        n = np.arange(1, 2 * N + 1, dtype=_LD)
        mn = np.asarray(m_of_p(n * _PI / (2 * L)), dtype=_LD)
        d = np.arange(-(2 * N - 2), 2 * N - 1, dtype=_LD)
        cosmat = np.cos(np.outer(d, n) * _PI / (2 * N))
        A = cosmat @ mn / (2 * N)
        B = cosmat @ (mn * (-1.0) ** n) / (2 * N)
        off = 2 * N - 2
        M = A[(K - J) + off] - B[(K + J) + off]
    elif grid.kind == BasisKind.ANTIPERIODIC:
        odd = np.arange(1, 2 * N + 1, 2, dtype=_LD)
        mo = np.asarray(m_of_p(odd * _PI / (2 * L)), dtype=_LD)
        d = np.arange(-(2 * N - 1), 2 * N, dtype=_LD)
        T = np.cos(np.outer(d, odd) * _PI / (2 * N)) @ mo / N
        M = T[(K - J) + (2 * N - 1)]
    else:  # NEUMANN
        n = np.arange(1, 2 * N + 1, dtype=_LD)
        mn = np.asarray(m_of_p(n * _PI / (2 * L)), dtype=_LD)
        d = np.arange(-2 * N, 2 * N + 1, dtype=_LD)
        cosmat = np.cos(np.outer(d, n) * _PI / (2 * N + 1))
        A = cosmat @ mn / (2 * N + 1)
        B = cosmat @ (mn * (-1.0) ** n) / (2 * N + 1)
        M = A[(K - J) + 2 * N] + B[(K + J) + 2 * N] + _LD(m_of_p(_LD(0))) / (2 * N + 1)

    return OperatorMatrix(grid=grid, entries=M.astype(np.float64), label=label)


def _even_closed_form_diagonal(grid: Grid, m_of_p: Callable) -> np.ndarray:
    """Diagonal of the closed-form matrix, without building the matrix.

    Used by the box-size optimization, where only the trace is needed.
    """
    N = grid.N
    L = _LD(grid.L)
    k = grid.indices

    if grid.kind == BasisKind.PERIODIC:
        r = np.arange(1, N + 1, dtype=_LD)
        mr = np.asarray(m_of_p(r * _PI / L), dtype=_LD)
        const = 2 * mr.sum() / (2 * N + 1) + _LD(m_of_p(_LD(0))) / (2 * N + 1)
        return np.full(grid.dim, const, dtype=_LD)
    if grid.kind == BasisKind.DIRICHLET:
        n = np.arange(1, 2 * N + 1, dtype=_LD)
        mn = np.asarray(m_of_p(n * _PI / (2 * L)), dtype=_LD)
        a0 = mn.sum() / (2 * N)
        s = (2 * k).astype(_LD)
        B = np.cos(np.outer(s, n) * _PI / (2 * N)) @ (mn * (-1.0) ** n) / (2 * N)
        return a0 - B
    if grid.kind == BasisKind.ANTIPERIODIC:
        odd = np.arange(1, 2 * N + 1, 2, dtype=_LD)
        mo = np.asarray(m_of_p(odd * _PI / (2 * L)), dtype=_LD)
        return np.full(grid.dim, mo.sum() / N, dtype=_LD)
    # NEUMANN
    n = np.arange(1, 2 * N + 1, dtype=_LD)
    mn = np.asarray(m_of_p(n * _PI / (2 * L)), dtype=_LD)
    a0 = mn.sum() / (2 * N + 1) + _LD(m_of_p(_LD(0))) / (2 * N + 1)
    s = (2 * k).astype(_LD)
    B = np.cos(np.outer(s, n) * _PI / (2 * N + 1)) @ (mn * (-1.0) ** n) / (2 * N + 1)
    return a0 + B


def _abs_power(alpha: float) -> Callable:
    ld_alpha = _LD(alpha)

    def m(p):
        p = np.abs(np.asarray(p, dtype=_LD))
        out = np.zeros_like(p)
        nz = p > 0
        out[nz] = p[nz] ** ld_alpha
        return out if out.ndim else _LD(out)

    return m


def fractional_laplacian_matrix(coeffs: SpectralCoefficients, alpha: float) -> OperatorMatrix:
    """Matrix of (-Laplacian)^(alpha/2) = |p|^alpha via the closed forms.

    The n = 0 term is zero for every alpha > 0; alpha <= 0 is rejected.
    """
    if not np.isfinite(alpha) or alpha <= 0:
        raise ParameterError(f"alpha must be positive, got {alpha!r}")
    return _even_closed_form(
        coeffs.grid, _abs_power(alpha), label=f"|p|^{alpha:g}"
    )


def fractional_multiplier(alpha: float) -> SpectralMultiplier:
    """|p|^alpha as a generic multiplier (the slow, general route)."""
    if not np.isfinite(alpha) or alpha <= 0:
        raise ParameterError(f"alpha must be positive, got {alpha!r}")
    return SpectralMultiplier(
        symbol=lambda p: abs(p) ** alpha if p != 0 else 0.0,
        label=f"|p|^{alpha:g}",
    )
