"""Little-sinc collocation for 1D fractional Schrodinger eigenproblems.

The Hamiltonian H = D (-hbar^2 Laplacian)^(alpha/2) + V(x) is discretized
on a bounded interval [-L, L] with cardinal sampling functions adapted to
periodic, Dirichlet, antiperiodic or Neumann boundary conditions.  The
fractional kinetic term acts as the spectral multiplier |p|^alpha, whose
dense collocation matrix has a real trigonometric closed form for each
sampling set.

Typical use:

>>> import fraclap
>>> grid = fraclap.make_grid(fraclap.BasisKind.DIRICHLET, 50, 8.518)
>>> spec = fraclap.HamiltonianSpec(alpha=1.5, potential=lambda x: x * x,
...                                kind=fraclap.BasisKind.DIRICHLET, N=50)
>>> H = fraclap.assemble(spec, 8.518)
>>> fraclap.eigendecompose(H).eigenvalues[:3]
array([1.0026919 , 2.70818152, 4.17784097])
"""

__version__ = "0.1.0"

from .basis import (
    BasisKind,
    Grid,
    SpectralCoefficients,
    coefficients,
    eval_sampling_function,
    interpolate,
    make_grid,
    quadrature_weights,
)
from .eigen import (
    Spectrum,
    classify_parity,
    eigendecompose,
    evolution_coefficients,
    evolve,
    parity_map,
    reconstruct,
)
from .errors import (
    ConfigError,
    ContractError,
    DimensionError,
    EvaluationError,
    FraclapError,
    MultiplierDomainError,
    NumericalError,
    ParameterError,
    ParseError,
)
from .hamiltonian import (
    HamiltonianSpec,
    PmsResult,
    assemble,
    find_momentum_pms_length,
    find_pms_length,
    momentum_space_oscillator,
    trace,
)
from .operators import (
    OperatorMatrix,
    SpectralMultiplier,
    fractional_laplacian_matrix,
    fractional_multiplier,
    multiplier_matrix,
)
from .potential import PotentialExpr, evaluate, parse, to_source
from .reference import (
    WkbModel,
    beta_function,
    box_eigenfunction,
    exact_box_energy,
    ln_gamma,
    wkb_energy,
)

__all__ = [
    "BasisKind",
    "Grid",
    "SpectralCoefficients",
    "coefficients",
    "eval_sampling_function",
    "interpolate",
    "make_grid",
    "quadrature_weights",
    "Spectrum",
    "classify_parity",
    "eigendecompose",
    "evolution_coefficients",
    "evolve",
    "parity_map",
    "reconstruct",
    "FraclapError",
    "ParameterError",
    "DimensionError",
    "MultiplierDomainError",
    "ContractError",
    "NumericalError",
    "ParseError",
    "EvaluationError",
    "ConfigError",
    "HamiltonianSpec",
    "PmsResult",
    "assemble",
    "find_momentum_pms_length",
    "find_pms_length",
    "momentum_space_oscillator",
    "trace",
    "OperatorMatrix",
    "SpectralMultiplier",
    "fractional_laplacian_matrix",
    "fractional_multiplier",
    "multiplier_matrix",
    "PotentialExpr",
    "evaluate",
    "parse",
    "to_source",
    "WkbModel",
    "beta_function",
    "box_eigenfunction",
    "exact_box_energy",
    "ln_gamma",
    "wkb_energy",
    "__version__",
]
