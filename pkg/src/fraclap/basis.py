"""Little-sinc sampling sets on [-L, L] for four boundary-condition families.

Each basis kind carries a uniform grid of sampling points and a family of
cardinal sampling functions s_k, stored through their expansion coefficients
C_n(k, N) in the exponentials exp(i n pi x / (2L)), n = -2N..2N.  The
coefficients are independent of L; only the grid points and the exponential
frequencies scale with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionError, ParameterError

# Maximum imaginary residue tolerated when a sampling-function sum is
# collapsed to its real part.
_IMAG_TOL = 1e-12

# i**m evaluated exactly, indexed by m mod 4.
_IPOW = np.array([1.0, 1.0j, -1.0, -1.0j])


class BasisKind(Enum):
    PERIODIC = "periodic"  # f(-L) = f(L)
    DIRICHLET = "dirichlet"  # f(-L) = f(L) = 0
    ANTIPERIODIC = "antiperiodic"  # f(-L) = -f(L)
    NEUMANN = "neumann"  # f'(-L) = f'(L) = 0


@dataclass(frozen=True)
class Grid:
    """Uniform sampling grid of one basis kind.

    ``indices`` are the integer labels k of the sampling points and
    ``points`` the abscissae x_k; both are ordered increasingly.
    """

    kind: BasisKind
    N: int
    L: float
    indices: np.ndarray
    points: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.indices)

    def position(self, k: int) -> int:
        """Array position of grid index k."""
        pos = int(k - self.indices[0])
        if pos < 0 or pos >= self.dim or self.indices[pos] != k:
            raise IndexError(f"grid index {k} outside {self.kind.value} index set")
        return pos


@dataclass(frozen=True)
class SpectralCoefficients:
    """Expansion coefficients C_n(k, N) of every sampling function.

    ``values[p, q]`` is the coefficient of exp(i n pi x / (2L)) in s_k,
    with k = grid.indices[p] and n = n_values[q].
    """

    grid: Grid
    values: np.ndarray  # complex, shape (dim, 4N + 1)
    n_values: np.ndarray  # integers -2N..2N


def make_grid(kind: BasisKind, N: int, L: float) -> Grid:
    """Build the sampling grid for a basis kind.

    Periodic and Neumann sets use x_k = 2Lk/(2N+1), k = -N..N.  Dirichlet
    uses x_k = Lk/N with the endpoints dropped (they carry f = 0), and the
    antiperiodic set uses x_k = Lk/N for k = -N..N-1 (the value at +L is
    determined by the one at -L).
    """
    if not isinstance(N, (int, np.integer)) or N < 2:
        raise ParameterError(f"N must be an integer >= 2, got {N!r}")
    if not np.isfinite(L) or L <= 0:
        raise ParameterError(f"L must be a positive real, got {L!r}")

    if kind in (BasisKind.PERIODIC, BasisKind.NEUMANN):
        indices = np.arange(-N, N + 1)
        points = 2.0 * L * indices / (2 * N + 1)
    elif kind == BasisKind.DIRICHLET:
        indices = np.arange(-(N - 1), N)
        points = L * indices / N
    elif kind == BasisKind.ANTIPERIODIC:
        indices = np.arange(-N, N)
        points = L * indices / N
    else:  # pragma: no cover - enum is exhaustive
        raise ParameterError(f"unknown basis kind {kind!r}")

    return Grid(kind=kind, N=int(N), L=float(L), indices=indices, points=points)


def coefficients(grid: Grid) -> SpectralCoefficients:
    """Coefficients C_n(k, N) of s_k in exp(i n pi x / (2L)), n = -2N..2N.

    These depend only on the kind and on N, never on L.
    """
    N = grid.N
    n = np.arange(-2 * N, 2 * N + 1)
    k = grid.indices[:, None]
    nn = n[None, :]

    if grid.kind == BasisKind.PERIODIC:
        sel = (1.0 + (-1.0) ** nn) / (2.0 * (2 * N + 1))
        values = sel * np.exp(-1j * nn * k * np.pi / (2 * N + 1))
    elif grid.kind == BasisKind.DIRICHLET:
        values = (
            _IPOW[(nn - 1) % 4]
            * np.sin((0.5 + k / (2.0 * N)) * nn * np.pi)
            / (2.0 * N)
        )
    elif grid.kind == BasisKind.ANTIPERIODIC:
        sel = (1.0 - (-1.0) ** nn) / (4.0 * N)
        values = sel * np.exp(-1j * nn * k * np.pi / (2 * N))
    else:  # NEUMANN
        values = (
            _IPOW[nn % 4]
            * np.cos((0.5 + k / (2.0 * N + 1)) * nn * np.pi)
            / (2.0 * N + 1)
        )

    return SpectralCoefficients(grid=grid, values=values, n_values=n)


def _exponential_table(coeffs: SpectralCoefficients, x) -> np.ndarray:
    """exp(i n pi x / (2L)) for all n, shape (4N+1, len(x))."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    freq = coeffs.n_values[:, None] * np.pi / (2.0 * coeffs.grid.L)
    return np.exp(1j * freq * x[None, :])


def _collapse_real(z: np.ndarray) -> np.ndarray:
    scale = max(1.0, float(np.abs(z).max(initial=0.0)))
    resid = float(np.abs(z.imag).max(initial=0.0))
    assert resid <= _IMAG_TOL * scale, (
        f"imaginary residue {resid:.3e} exceeds tolerance"
    )
    return np.ascontiguousarray(z.real)


def eval_sampling_function(coeffs: SpectralCoefficients, k: int, x) -> float | np.ndarray:
    """Evaluate s_k at x (scalar or array); the result is real."""
    row = coeffs.values[coeffs.grid.position(k)]
    vals = _collapse_real(row @ _exponential_table(coeffs, x))
    return float(vals[0]) if np.isscalar(x) else vals


def interpolate(coeffs: SpectralCoefficients, samples, x) -> float | np.ndarray:
    """Evaluate sum_k samples[k] * s_k(x) at x (scalar or array)."""
    samples = np.asarray(samples, dtype=float)
    if samples.shape != (coeffs.grid.dim,):
        raise DimensionError(
            f"expected {coeffs.grid.dim} samples, got shape {samples.shape}"
        )
    row = samples @ coeffs.values
    vals = _collapse_real(row @ _exponential_table(coeffs, x))
    return float(vals[0]) if np.isscalar(x) else vals


def quadrature_weights(coeffs: SpectralCoefficients) -> np.ndarray:
    """Weights w_k = integral of s_k over [-L, L], computed term by term.

    The n = 0 exponential integrates to 2L, every other one to
    (4L / (n pi)) sin(n pi / 2).
    """
    N = coeffs.grid.N
    L = coeffs.grid.L
    n = coeffs.n_values.astype(float)
    term = np.empty_like(n)
    nz = n != 0
    term[~nz] = 2.0 * L
    term[nz] = (4.0 * L / (n[nz] * np.pi)) * np.sin(n[nz] * np.pi / 2.0)
    return _collapse_real(coeffs.values @ term)
