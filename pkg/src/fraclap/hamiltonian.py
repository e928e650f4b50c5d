"""Hamiltonian assembly and box-size selection by minimal sensitivity.

The Hamiltonian is H = D * hbar**alpha * |p|^alpha + diag(V(x_k)).  The box
half-length L is an unphysical parameter of the sampling set; it is chosen
at the minimum of trace(H(L)), which is cheap to evaluate because only the
diagonal of the kinetic matrix is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .basis import BasisKind, Grid, coefficients, make_grid
from .errors import EvaluationError, NumericalError, ParameterError
from .operators import (
    OperatorMatrix,
    _abs_power,
    _even_closed_form,
    _even_closed_form_diagonal,
)

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class HamiltonianSpec:
    """Physical model and discretization, everything except the box size."""

    alpha: float
    potential: Callable[[float], float]
    kind: BasisKind
    N: int
    d_alpha: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("alpha", "d_alpha", "hbar"):
            v = getattr(self, name)
            if not np.isfinite(v) or v <= 0:
                raise ParameterError(f"{name} must be positive, got {v!r}")


@dataclass(frozen=True)
class PmsResult:
    """Outcome of the trace-minimizing box-size search."""

    L_pms: float
    trace_at_min: float
    scan: tuple  # (L, trace) pairs from the coarse pre-scan
    converged: bool


def _potential_values(potential, points) -> np.ndarray:
    fn = potential.evaluate if hasattr(potential, "evaluate") else potential
    out = np.empty(len(points))
    for i, x in enumerate(points):
        try:
            v = fn(float(x))
        except EvaluationError:
            raise
        except Exception as exc:
            raise EvaluationError(f"potential evaluation failed: {exc}", float(x))
        if not np.isfinite(v):
            raise EvaluationError(f"potential is not finite (got {v!r})", float(x))
        out[i] = v
    return out


def assemble(spec: HamiltonianSpec, L: float) -> OperatorMatrix:
    """Hamiltonian matrix on the (kind, N, L) grid.

    The kinetic prefactor is D * hbar**alpha, from
    (-hbar**2 Laplacian)^(alpha/2) = hbar**alpha |p|^alpha.
    """
    grid = make_grid(spec.kind, spec.N, L)
    kinetic = _even_closed_form(grid, _abs_power(spec.alpha), label="")
    prefactor = spec.d_alpha * spec.hbar ** spec.alpha
    entries = prefactor * kinetic.entries + np.diag(_potential_values(spec.potential, grid.points))
    return OperatorMatrix(
        grid=grid,
        entries=entries,
        label=f"D|p|^{spec.alpha:g} + V",
    )


def trace(H: OperatorMatrix) -> float:
    return float(np.trace(H.entries))


def _trace_of(spec: HamiltonianSpec, L: float) -> float:
    """trace(assemble(spec, L)) without assembling the full matrix."""
    grid = make_grid(spec.kind, spec.N, L)
    kin = _even_closed_form_diagonal(grid, _abs_power(spec.alpha)).sum()
    prefactor = spec.d_alpha * spec.hbar ** spec.alpha
    return float(prefactor * kin + _potential_values(spec.potential, grid.points).sum())


def _golden_minimize(f, a: float, b: float, c: float, tol: float) -> float:
    """Golden-section minimum of f on a bracket a < b < c with f(b) lowest."""
    lo, hi = a, c
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = f(x2)
    return 0.5 * (lo + hi)


def _minimize_scan(trace_fn, bracket, tol, scan_points=32) -> PmsResult:
    lo, hi = bracket
    if not (0 < lo < hi):
        raise ParameterError(f"need 0 < L_lo < L_hi, got {bracket!r}")
    Ls = np.linspace(lo, hi, scan_points)
    traces = np.array([trace_fn(L) for L in Ls])
    if not np.all(np.isfinite(traces)):
        bad = Ls[~np.isfinite(traces)][0]
        raise NumericalError(f"trace is not finite at L = {bad:g}")
    scan = tuple(zip(Ls.tolist(), traces.tolist()))
    i = int(np.argmin(traces))
    if i == 0 or i == scan_points - 1:
        # minimum sits on the bracket edge; caller must widen the bracket
        return PmsResult(
            L_pms=float(Ls[i]),
            trace_at_min=float(traces[i]),
            scan=scan,
            converged=False,
        )
    L_best = _golden_minimize(trace_fn, Ls[i - 1], Ls[i], Ls[i + 1], tol)
    return PmsResult(
        L_pms=float(L_best),
        trace_at_min=float(trace_fn(L_best)),
        scan=scan,
        converged=True,
    )


def find_pms_length(
    spec: HamiltonianSpec,
    bracket: tuple[float, float] = (0.5, 40.0),
    tol: float = 1e-3,
) -> PmsResult:
    """Box size at the trace minimum (principle of minimal sensitivity).

    A 32-point coarse scan over ``bracket`` locates the minimum, which is
    then refined by golden-section search to ``tol`` in L.  If the coarse
    minimum lands on a bracket edge the result carries converged=False.
    """
    return _minimize_scan(lambda L: _trace_of(spec, L), bracket, tol)


def momentum_space_oscillator(alpha: float, N: int, L: float) -> OperatorMatrix:
    """Fractional oscillator (beta = 2) in the momentum representation.

    x**2 becomes -d^2/dp^2, discretized as the p**2 multiplier on a
    Dirichlet grid in the momentum variable, while the kinetic term
    |p|^alpha is diagonal.  Only the beta = 2 potential transforms this way.
    """
    if not np.isfinite(alpha) or alpha <= 0:
        raise ParameterError(f"alpha must be positive, got {alpha!r}")
    grid = make_grid(BasisKind.DIRICHLET, N, L)
    second_derivative = _even_closed_form(grid, lambda p: p * p, label="")
    entries = second_derivative.entries + np.diag(np.abs(grid.points) ** alpha)
    return OperatorMatrix(grid=grid, entries=entries, label=f"p^2 + |p|^{alpha:g} (momentum rep)")


def find_momentum_pms_length(
    alpha: float,
    N: int,
    bracket: tuple[float, float] = (0.5, 150.0),
    tol: float = 1e-3,
) -> PmsResult:
    """Trace-minimizing momentum half-width for the momentum-space oscillator."""

    def trace_fn(L):
        grid = make_grid(BasisKind.DIRICHLET, N, L)
        kin = _even_closed_form_diagonal(grid, lambda p: p * p).sum()
        return float(kin + np.sum(np.abs(grid.points) ** alpha))

    return _minimize_scan(trace_fn, bracket, tol)
