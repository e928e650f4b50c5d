"""Flat key = value job configuration.

One ``key = value`` per line, no sections; blank lines and lines starting
with '#' are ignored.  Values stay strings until ``JobConfig`` interprets
them, so command-line overrides can be applied uniformly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .basis import BasisKind
from .errors import ConfigError

MODES = ("spectrum", "convergence", "pms-scan", "q-sweep", "evolve", "wkb-compare")

_PRESET_RE = re.compile(r"^(oscillator|mathieu)\(([^()]*)\)$")


def parse_config_text(text: str) -> dict[str, str]:
    """Key/value pairs from config text; later keys override earlier ones."""
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not key:
            raise ConfigError(f"line {lineno}: empty key")
        pairs[key] = value
    return pairs


@dataclass(frozen=True)
class Preset:
    """A built-in potential: oscillator(beta), mathieu(q) or free."""

    name: str  # 'oscillator' | 'mathieu' | 'free'
    parameter: float = 0.0


def _parse_potential(text: str):
    """Either a Preset or the raw expression text."""
    text = text.strip()
    if text == "free":
        return Preset("free")
    m = _PRESET_RE.match(text)
    if m:
        name, arg = m.group(1), m.group(2).strip()
        try:
            value = float(arg)
        except ValueError:
            raise ConfigError(f"preset {name}() needs a numeric argument, got {arg!r}")
        if name == "oscillator" and value <= 0:
            raise ConfigError(f"oscillator exponent must be positive, got {value!r}")
        return Preset(name, value)
    return text


def _parse_float(pairs, key, default=None):
    if key not in pairs:
        if default is None:
            raise ConfigError(f"missing required key {key!r}")
        return default
    try:
        return float(pairs[key])
    except ValueError:
        raise ConfigError(f"key {key!r}: expected a number, got {pairs[key]!r}")


def _parse_int_list(text: str, key: str) -> list[int]:
    try:
        return [int(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigError(f"key {key!r}: expected integers, got {text!r}")


def _parse_float_list(text: str, key: str) -> list[float]:
    try:
        return [float(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigError(f"key {key!r}: expected numbers, got {text!r}")


@dataclass(frozen=True)
class JobConfig:
    """A fully validated batch job."""

    mode: str
    basis: BasisKind
    alpha: float
    d_alpha: float
    hbar: float
    potential: object  # Preset or expression text
    n_list: tuple[int, ...]
    L: float | None  # None means PMS-optimized
    n_states: int
    sweep: tuple[float, float, int] | None
    psi0: str | None
    times: tuple[float, ...]
    out_format: str

    @property
    def N(self) -> int:
        return self.n_list[0]

    @property
    def is_mathieu(self) -> bool:
        return isinstance(self.potential, Preset) and self.potential.name == "mathieu"

    @property
    def is_oscillator(self) -> bool:
        return isinstance(self.potential, Preset) and self.potential.name == "oscillator"


def build_job_config(pairs: dict[str, str]) -> JobConfig:
    """Validate raw key/value pairs into a JobConfig."""
    mode = pairs.get("mode", "").strip()
    if mode not in MODES:
        raise ConfigError(f"mode must be one of {', '.join(MODES)}; got {mode!r}")

    potential = _parse_potential(pairs.get("potential", "free"))
    is_mathieu = isinstance(potential, Preset) and potential.name == "mathieu"

    basis_text = pairs.get("basis", "").strip().lower()
    if basis_text:
        try:
            basis = BasisKind(basis_text)
        except ValueError:
            raise ConfigError(f"unknown basis {basis_text!r}")
    elif is_mathieu:
        basis = BasisKind.PERIODIC
    else:
        basis = BasisKind.DIRICHLET

    alpha = _parse_float(pairs, "alpha")
    d_alpha = _parse_float(pairs, "D", 1.0)
    hbar = _parse_float(pairs, "hbar", 1.0)

    if "N" not in pairs:
        raise ConfigError("missing required key 'N'")
    n_list = tuple(_parse_int_list(pairs["N"], "N"))
    if not n_list:
        raise ConfigError("key 'N': empty list")
    if mode == "convergence" and len(n_list) < 2:
        raise ConfigError("convergence mode needs a list of at least two N values")
    if mode != "convergence" and len(n_list) != 1:
        raise ConfigError(f"mode {mode!r} takes a single N value")

    L_text = pairs.get("L", "").strip().lower()
    if is_mathieu:
        # the box is pinned to the potential period
        if L_text == "pms":
            raise ConfigError("the mathieu preset fixes L = pi; L = pms is not allowed")
        if L_text in ("", "pi"):
            L = math.pi
        else:
            L = _parse_float(pairs, "L")
    elif L_text in ("", "pms"):
        if basis == BasisKind.PERIODIC:
            raise ConfigError("periodic problems fix L by the potential period; give L explicitly")
        L = None
    else:
        L = _parse_float(pairs, "L")
        if L <= 0:
            raise ConfigError(f"L must be positive, got {L!r}")

    n_states = int(_parse_float(pairs, "n_states", 4.0))
    if n_states < 1:
        raise ConfigError(f"n_states must be >= 1, got {n_states}")

    sweep = None
    if mode == "q-sweep":
        if not is_mathieu:
            raise ConfigError("q-sweep mode needs potential = mathieu(q)")
        q_min = _parse_float(pairs, "q_min", 0.0)
        q_max = _parse_float(pairs, "q_max")
        steps = int(_parse_float(pairs, "q_steps"))
        if steps < 2:
            raise ConfigError(f"q_steps must be >= 2, got {steps}")
        if not q_min < q_max:
            raise ConfigError(f"need q_min < q_max, got {q_min!r} >= {q_max!r}")
        sweep = (q_min, q_max, steps)

    psi0 = None
    times: tuple[float, ...] = ()
    if mode == "evolve":
        if basis != BasisKind.DIRICHLET:
            raise ConfigError("evolve mode needs the dirichlet basis")
        psi0 = pairs.get("psi0", "").strip()
        if not psi0:
            raise ConfigError("evolve mode needs a psi0 expression")
        if "times" not in pairs:
            raise ConfigError("evolve mode needs a times list")
        times = tuple(_parse_float_list(pairs["times"], "times"))
        if not times:
            raise ConfigError("key 'times': empty list")

    if mode == "wkb-compare" and not (
        isinstance(potential, Preset) and potential.name == "oscillator"
    ):
        raise ConfigError("wkb-compare mode needs potential = oscillator(beta)")

    out_format = pairs.get("format", "csv").strip().lower()
    if out_format not in ("csv", "json"):
        raise ConfigError(f"format must be csv or json, got {out_format!r}")

    return JobConfig(
        mode=mode,
        basis=basis,
        alpha=alpha,
        d_alpha=d_alpha,
        hbar=hbar,
        potential=potential,
        n_list=n_list,
        L=L,
        n_states=n_states,
        sweep=sweep,
        psi0=psi0,
        times=times,
        out_format=out_format,
    )
