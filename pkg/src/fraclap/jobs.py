"""Batch job runners and machine-readable table output.

Every runner returns one or more ``ResultTable`` objects; the writers emit
them as CSV (with a '#'-prefixed metadata header) or JSON (same fields,
numbers as 15-significant-digit decimal strings).  Output is deterministic:
identical configs produce byte-identical files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .basis import BasisKind, coefficients, make_grid
from .config import JobConfig, Preset
from .eigen import Spectrum, classify_parity, eigendecompose, evolution_coefficients, evolve
from .errors import ConfigError, NumericalError
from .hamiltonian import HamiltonianSpec, assemble, find_pms_length
from .potential import parse
from .reference import WkbModel, wkb_energy

_DIGITS = 15


def _fmt(value) -> str:
    """15-significant-digit decimal rendering used in every output file."""
    if isinstance(value, str):
        return value
    return f"{value:.{_DIGITS}g}"


@dataclass
class ResultTable:
    name: str  # output file stem, e.g. 'spectrum'
    columns: list
    rows: list  # lists of numbers/strings, one per row
    metadata: dict


def _potential_callable(cfg: JobConfig):
    """Callable V(x) plus a printable description of the potential."""
    pot = cfg.potential
    if isinstance(pot, Preset):
        if pot.name == "free":
            return (lambda x: 0.0), "free"
        if pot.name == "oscillator":
            beta = pot.parameter
            return (lambda x: abs(x) ** beta), f"oscillator({beta:g})"
        q = pot.parameter
        return (lambda x: 2.0 * q * math.cos(2.0 * x)), f"mathieu({q:g})"
    return parse(pot), pot


def _base_metadata(cfg: JobConfig, potential_text: str) -> dict:
    return {
        "mode": cfg.mode,
        "basis": cfg.basis.value,
        "alpha": _fmt(cfg.alpha),
        "D": _fmt(cfg.d_alpha),
        "hbar": _fmt(cfg.hbar),
        "potential": potential_text,
        "precision": f"{_DIGITS} significant digits (double precision)",
        "version": __version__,
    }


def _solve(cfg: JobConfig, N: int):
    """Assemble and diagonalize for one N; resolves L by PMS when needed."""
    fn, pot_text = _potential_callable(cfg)
    spec = HamiltonianSpec(
        alpha=cfg.alpha,
        potential=fn,
        kind=cfg.basis,
        N=N,
        d_alpha=cfg.d_alpha,
        hbar=cfg.hbar,
    )
    if cfg.L is None:
        pms = find_pms_length(spec)
        if not pms.converged:
            raise NumericalError(
                f"PMS scan found the trace minimum at a bracket edge (L = {pms.L_pms:g}); "
                "widen the bracket"
            )
        L_used = pms.L_pms
    else:
        pms = None
        L_used = cfg.L
    spectrum = eigendecompose(assemble(spec, L_used))
    classify_parity(spectrum)
    return spectrum, L_used, pms, pot_text


def _wkb_model(cfg: JobConfig) -> WkbModel | None:
    if cfg.is_oscillator:
        return WkbModel(
            alpha=cfg.alpha,
            beta=cfg.potential.parameter,
            d_alpha=cfg.d_alpha,
            hbar=cfg.hbar,
        )
    return None


def run_spectrum(cfg: JobConfig) -> ResultTable:
    """Lowest n_states levels with parity/period labels and a WKB column."""
    spectrum, L_used, pms, pot_text = _solve(cfg, cfg.N)
    model = _wkb_model(cfg)
    rows = []
    for n in range(min(cfg.n_states, spectrum.grid.dim)):
        parity, period = spectrum.labels[n]
        rows.append(
            [
                n,
                float(spectrum.eigenvalues[n]),
                float(wkb_energy(model, n)) if model else "",
                parity,
                period if period else "",
            ]
        )
    metadata = _base_metadata(cfg, pot_text)
    metadata["N"] = str(cfg.N)
    metadata["L"] = _fmt(L_used)
    if pms is not None:
        metadata["L_pms"] = _fmt(pms.L_pms)
    return ResultTable(
        name="spectrum",
        columns=["n", "energy", "wkb_energy", "parity", "period"],
        rows=rows,
        metadata=metadata,
    )


def run_convergence(cfg: JobConfig) -> ResultTable:
    """One row per N; L is re-optimized per N when PMS is requested."""
    rows = []
    pot_text = ""
    for N in cfg.n_list:
        spectrum, L_used, _, pot_text = _solve(cfg, N)
        m = min(cfg.n_states, spectrum.grid.dim)
        rows.append([N, float(L_used)] + [float(e) for e in spectrum.eigenvalues[:m]])
    metadata = _base_metadata(cfg, pot_text)
    metadata["N"] = ",".join(str(N) for N in cfg.n_list)
    columns = ["N", "L_used"] + [f"e{i}" for i in range(cfg.n_states)]
    return ResultTable(name="convergence", columns=columns, rows=rows, metadata=metadata)


def run_pms_scan(cfg: JobConfig) -> ResultTable:
    """The coarse (L, trace) scan together with the refined minimum."""
    fn, pot_text = _potential_callable(cfg)
    spec = HamiltonianSpec(
        alpha=cfg.alpha,
        potential=fn,
        kind=cfg.basis,
        N=cfg.N,
        d_alpha=cfg.d_alpha,
        hbar=cfg.hbar,
    )
    pms = find_pms_length(spec)
    metadata = _base_metadata(cfg, pot_text)
    metadata["N"] = str(cfg.N)
    metadata["L_pms"] = _fmt(pms.L_pms)
    metadata["trace_at_min"] = _fmt(pms.trace_at_min)
    metadata["converged"] = str(pms.converged).lower()
    rows = [[float(L), float(t)] for L, t in pms.scan]
    return ResultTable(name="pms_scan", columns=["L", "trace"], rows=rows, metadata=metadata)


_SWEEP_LABELS = ("a0", "b1", "a1", "b2", "a2", "b3", "a3")


def _labeled_mathieu_states(alpha, N, q, d_alpha, hbar):
    """Spectrum of |p|^alpha + 2q cos(2z) on the periodic grid, L = pi."""
    spec = HamiltonianSpec(
        alpha=alpha,
        potential=lambda x: 2.0 * q * math.cos(2.0 * x),
        kind=BasisKind.PERIODIC,
        N=N,
        d_alpha=d_alpha,
        hbar=hbar,
    )
    spectrum = eigendecompose(assemble(spec, math.pi))
    classify_parity(spectrum)
    # characteristic values by symmetry class, each ascending
    even = [i for i, (p, _) in enumerate(spectrum.labels) if p == "even"]
    odd = [i for i, (p, _) in enumerate(spectrum.labels) if p == "odd"]
    picks = {}
    for label in _SWEEP_LABELS:
        family = even if label.startswith("a") else odd
        rank = int(label[1:]) if label.startswith("a") else int(label[1:]) - 1
        if rank >= len(family):
            raise NumericalError(
                f"not enough pure-parity states to label {label} "
                f"(some states classified as mixed); increase N"
            )
        picks[label] = family[rank]
    return spectrum, picks


def run_q_sweep(cfg: JobConfig) -> ResultTable:
    """Characteristic-value branches over a q range, labels tracked by overlap."""
    q_min, q_max, steps = cfg.sweep
    qs = np.linspace(q_min, q_max, steps)
    rows = []
    warnings = []
    prev_vectors = None
    for q in qs:
        spectrum, picks = _labeled_mathieu_states(
            cfg.alpha, cfg.N, float(q), cfg.d_alpha, cfg.hbar
        )
        vectors = {
            label: spectrum.eigenvectors[:, idx] for label, idx in picks.items()
        }
        if prev_vectors is not None:
            for label in _SWEEP_LABELS:
                overlap = abs(float(vectors[label] @ prev_vectors[label]))
                if overlap < 0.5:
                    warnings.append(
                        f"branch {label} lost continuity at q = {q:.6g} "
                        f"(overlap {overlap:.3f})"
                    )
        prev_vectors = vectors
        rows.append(
            [float(q)] + [float(spectrum.eigenvalues[picks[l]]) for l in _SWEEP_LABELS]
        )
    _, pot_text = _potential_callable(cfg)
    metadata = _base_metadata(cfg, pot_text)
    metadata["N"] = str(cfg.N)
    metadata["L"] = _fmt(math.pi)
    if warnings:
        metadata["warnings"] = "; ".join(warnings)
    return ResultTable(
        name="sweep",
        columns=["q"] + list(_SWEEP_LABELS),
        rows=rows,
        metadata=metadata,
    )


def fit_levels(ns, energies):
    """Ordinary least squares E_n = intercept + slope * n.

    Returns (intercept, slope, residuals).
    """
    ns = np.asarray(ns, dtype=float)
    energies = np.asarray(energies, dtype=float)
    if len(ns) < 3:
        raise ConfigError(f"need at least 3 levels for a fit, got {len(ns)}")
    if np.ptp(ns) == 0:
        raise ConfigError("degenerate fit design: all level indices equal")
    slope, intercept = np.polyfit(ns, energies, 1)
    residuals = energies - (intercept + slope * ns)
    return float(intercept), float(slope), residuals


def run_fit(cfg: JobConfig) -> tuple[float, float, np.ndarray]:
    """Straight-line fit of the lowest n_states computed levels."""
    spectrum, _, _, _ = _solve(cfg, cfg.N)
    m = min(cfg.n_states, spectrum.grid.dim)
    return fit_levels(np.arange(m), spectrum.eigenvalues[:m])


def run_wkb_compare(cfg: JobConfig) -> ResultTable:
    """Computed levels next to the WKB closed form, plus a straight-line fit."""
    spectrum, L_used, pms, pot_text = _solve(cfg, cfg.N)
    model = _wkb_model(cfg)
    if model is None:
        raise ConfigError("wkb-compare needs an oscillator(beta) preset")
    m = min(cfg.n_states, spectrum.grid.dim)
    rows = []
    for n in range(m):
        e = float(spectrum.eigenvalues[n])
        w = float(wkb_energy(model, n))
        rows.append([n, e, w, e - w])
    intercept, slope, residuals = fit_levels(
        np.arange(m), spectrum.eigenvalues[:m]
    )
    metadata = _base_metadata(cfg, pot_text)
    metadata["N"] = str(cfg.N)
    metadata["L"] = _fmt(L_used)
    if pms is not None:
        metadata["L_pms"] = _fmt(pms.L_pms)
    metadata["fit_intercept"] = _fmt(intercept)
    metadata["fit_slope"] = _fmt(slope)
    metadata["fit_max_residual"] = _fmt(float(np.abs(residuals).max()))
    metadata["wkb_slope"] = _fmt(model.prefactor) if model.exponent == 1.0 else ""
    return ResultTable(
        name="wkb_compare",
        columns=["n", "energy", "wkb_energy", "difference"],
        rows=rows,
        metadata=metadata,
    )


def run_evolve(cfg: JobConfig) -> list[ResultTable]:
    """Time evolution of an initial packet; one table per requested time."""
    spectrum, L_used, _, pot_text = _solve(cfg, cfg.N)
    psi0_expr = parse(cfg.psi0)
    points = spectrum.grid.points
    psi0 = np.array([psi0_expr.evaluate(float(x)) for x in points], dtype=complex)
    coeff_norm = float(np.sum(np.abs(evolution_coefficients(spectrum, psi0)) ** 2))
    tables = []
    for t in cfg.times:
        psi_t = evolve(spectrum, psi0, cfg.hbar, float(t))
        rows = [
            [float(x), float(p.real), float(p.imag), float(abs(p) ** 2)]
            for x, p in zip(points, psi_t)
        ]
        metadata = _base_metadata(cfg, pot_text)
        metadata["N"] = str(cfg.N)
        metadata["L"] = _fmt(L_used)
        metadata["t"] = _fmt(float(t))
        metadata["psi0"] = cfg.psi0
        metadata["coeff_norm"] = _fmt(coeff_norm)
        tables.append(
            ResultTable(
                name=f"evolve_t{t:g}",
                columns=["x", "re", "im", "abs2"],
                rows=rows,
                metadata=metadata,
            )
        )
    return tables


def run_job(cfg: JobConfig) -> list[ResultTable]:
    """Dispatch a validated config to its runner."""
    if cfg.mode == "spectrum":
        return [run_spectrum(cfg)]
    if cfg.mode == "convergence":
        return [run_convergence(cfg)]
    if cfg.mode == "pms-scan":
        return [run_pms_scan(cfg)]
    if cfg.mode == "q-sweep":
        return [run_q_sweep(cfg)]
    if cfg.mode == "wkb-compare":
        return [run_wkb_compare(cfg)]
    if cfg.mode == "evolve":
        return run_evolve(cfg)
    raise ConfigError(f"unknown mode {cfg.mode!r}")  # pragma: no cover


def write_csv(table: ResultTable, directory) -> Path:
    path = Path(directory) / f"{table.name}.csv"
    lines = [f"# {key} = {value}" for key, value in table.metadata.items()]
    lines.append(",".join(table.columns))
    for row in table.rows:
        lines.append(",".join(_fmt(v) for v in row))
    path.write_text("\n".join(lines) + "\n")
    return path


def write_json(table: ResultTable, directory) -> Path:
    path = Path(directory) / f"{table.name}.json"
    payload = {
        "metadata": table.metadata,
        "columns": table.columns,
        "rows": [[_fmt(v) for v in row] for row in table.rows],
    }
    path.write_text(json.dumps(payload, indent=2) + "\n")
    return path


def write_tables(tables: list[ResultTable], directory, out_format: str) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    writer = write_csv if out_format == "csv" else write_json
    return [writer(t, directory) for t in tables]
