import math

import numpy as np
import pytest

from fraclap import (
    BasisKind,
    MultiplierDomainError,
    ParameterError,
    SpectralMultiplier,
    coefficients,
    fractional_laplacian_matrix,
    fractional_multiplier,
    make_grid,
    multiplier_matrix,
)
from fraclap.eigen import parity_map

ALL_KINDS = list(BasisKind)


def _coeffs(kind, N, L):
    return coefficients(make_grid(kind, N, L))


class TestMultiplierMatrix:
    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_identity_multiplier(self, kind):
        M = multiplier_matrix(_coeffs(kind, 5, 2.0), lambda p: 1.0)
        assert np.abs(M.entries - np.eye(M.dim)).max() <= 1e-12

    def test_p_squared_dirichlet_oracle(self):
        # oracle: the Dirichlet p^2 matrix must have the exact infinite-well
        # spectrum (n pi / 2L)^2, n = 1..dim
        L = 1.7
        grid = make_grid(BasisKind.DIRICHLET, 8, L)
        M = multiplier_matrix(coefficients(grid), lambda p: p * p)
        ev = np.linalg.eigvalsh(M.entries)
        exact = ((np.arange(1, grid.dim + 1) * np.pi) / (2 * L)) ** 2
        assert np.abs(ev - exact).max() / exact.max() <= 1e-12

    def test_abs_p_periodic_spectrum(self):
        # |p| on the periodic grid at L = pi: {0, 1, 1, 2, 2, ..., N, N}
        grid = make_grid(BasisKind.PERIODIC, 3, math.pi)
        M = multiplier_matrix(coefficients(grid), lambda p: abs(p))
        ev = np.sort(np.linalg.eigvalsh(M.entries))
        np.testing.assert_allclose(ev, [0, 1, 1, 2, 2, 3, 3], atol=1e-12)

    def test_rejects_nonfinite_multiplier(self):
        coeffs = _coeffs(BasisKind.PERIODIC, 3, 1.0)
        with pytest.raises(MultiplierDomainError):
            # singular at p = 0
            multiplier_matrix(coeffs, lambda p: 1.0 / p if p != 0 else float("inf"))

    def test_rejects_complex_multiplier(self):
        coeffs = _coeffs(BasisKind.DIRICHLET, 3, 1.0)
        with pytest.raises(MultiplierDomainError):
            multiplier_matrix(coeffs, lambda p: 1j * p)

    def test_label_carried(self):
        m = SpectralMultiplier(symbol=lambda p: p * p, label="p^2")
        M = multiplier_matrix(_coeffs(BasisKind.NEUMANN, 3, 1.0), m)
        assert M.label == "p^2"


class TestFractionalLaplacian:
    @pytest.mark.parametrize("kind", ALL_KINDS)
    @pytest.mark.parametrize("alpha", [0.5, 1.0, 1.5, 2.0, 3.0])
    def test_closed_form_matches_generic(self, kind, alpha):
        coeffs = _coeffs(kind, 5, 2.3)
        closed = fractional_laplacian_matrix(coeffs, alpha).entries
        generic = multiplier_matrix(coeffs, fractional_multiplier(alpha)).entries
        assert np.abs(closed - generic).max() <= 1e-12

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_symmetry(self, kind):
        M = fractional_laplacian_matrix(_coeffs(kind, 8, 1.0), 1.5).entries
        assert np.abs(M - M.T).max() <= 1e-13

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_positive_semidefinite(self, kind):
        M = fractional_laplacian_matrix(_coeffs(kind, 6, 1.4), 1.2).entries
        ev = np.linalg.eigvalsh(M)
        assert ev.min() >= -1e-12 * max(1.0, ev.max())

    @pytest.mark.parametrize("kind", ALL_KINDS)
    @pytest.mark.parametrize("alpha", [0.7, 1.5, 2.0])
    def test_length_scaling(self, kind, alpha):
        # momenta scale as 1/L, so the whole matrix scales as L**(-alpha)
        a = fractional_laplacian_matrix(_coeffs(kind, 5, 1.0), alpha).entries
        b = fractional_laplacian_matrix(_coeffs(kind, 5, 2.5), alpha).entries
        assert np.abs(a - b * 2.5**alpha).max() <= 1e-11 * np.abs(a).max()

    def test_alpha_two_is_second_derivative(self):
        # cross-check against the p^2 multiplier route
        coeffs = _coeffs(BasisKind.DIRICHLET, 6, 1.0)
        closed = fractional_laplacian_matrix(coeffs, 2.0).entries
        direct = multiplier_matrix(coeffs, lambda p: p * p).entries
        assert np.abs(closed - direct).max() <= 1e-11

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_commutes_with_parity(self, kind):
        # |p|^alpha is even, so [M, P] = 0 for the signed reflection P
        grid = make_grid(kind, 5, 1.0)
        M = fractional_laplacian_matrix(coefficients(grid), 1.5).entries
        perm, signs = parity_map(grid)
        P = np.zeros_like(M)
        P[np.arange(grid.dim), perm] = signs
        assert np.abs(P @ M - M @ P).max() <= 1e-11

    def test_dirichlet_free_spectrum_alpha_general(self):
        # fractional box levels (n pi / 2L)^alpha are exact for LSF collocation
        alpha, L = 1.3, 2.0
        grid = make_grid(BasisKind.DIRICHLET, 10, L)
        M = fractional_laplacian_matrix(coefficients(grid), alpha)
        ev = np.sort(np.linalg.eigvalsh(M.entries))
        exact = ((np.arange(1, grid.dim + 1) * np.pi) / (2 * L)) ** alpha
        assert np.abs(ev - exact).max() / exact.max() <= 1e-12

    def test_antiperiodic_free_spectrum(self):
        # surviving momenta are the odd half-integers (2n-1) pi / 2L, doubled
        alpha, L = 1.5, math.pi / 2
        grid = make_grid(BasisKind.ANTIPERIODIC, 4, L)
        M = fractional_laplacian_matrix(coefficients(grid), alpha)
        ev = np.sort(np.linalg.eigvalsh(M.entries))
        base = ((2 * np.arange(1, grid.N + 1) - 1) * np.pi / (2 * L)) ** alpha
        exact = np.sort(np.repeat(base, 2))
        assert np.abs(ev - exact).max() / exact.max() <= 1e-12

    @pytest.mark.parametrize("bad", [0.0, -1.0, float("nan")])
    def test_rejects_bad_alpha(self, bad):
        coeffs = _coeffs(BasisKind.DIRICHLET, 3, 1.0)
        with pytest.raises(ParameterError):
            fractional_laplacian_matrix(coeffs, bad)
        with pytest.raises(ParameterError):
            fractional_multiplier(bad)
