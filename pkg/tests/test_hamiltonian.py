import math

import numpy as np
import pytest

from fraclap import (
    BasisKind,
    EvaluationError,
    HamiltonianSpec,
    ParameterError,
    assemble,
    coefficients,
    eigendecompose,
    find_momentum_pms_length,
    find_pms_length,
    fractional_laplacian_matrix,
    make_grid,
    momentum_space_oscillator,
    trace,
)

FREE = lambda x: 0.0
HARMONIC = lambda x: x * x


class TestAssemble:
    def test_free_equals_kinetic(self):
        spec = HamiltonianSpec(alpha=1.5, potential=FREE, kind=BasisKind.DIRICHLET, N=6)
        H = assemble(spec, 2.0)
        K = fractional_laplacian_matrix(coefficients(make_grid(BasisKind.DIRICHLET, 6, 2.0)), 1.5)
        assert np.abs(H.entries - K.entries).max() == 0

    def test_potential_on_diagonal(self):
        spec = HamiltonianSpec(alpha=2.0, potential=HARMONIC, kind=BasisKind.DIRICHLET, N=5)
        H = assemble(spec, 3.0)
        free = assemble(
            HamiltonianSpec(alpha=2.0, potential=FREE, kind=BasisKind.DIRICHLET, N=5), 3.0
        )
        diff = H.entries - free.entries
        assert np.abs(diff - np.diag(np.diag(diff))).max() == 0
        np.testing.assert_allclose(np.diag(diff), H.grid.points**2, atol=1e-14)

    def test_prefactor_scaling(self):
        base = assemble(
            HamiltonianSpec(alpha=1.5, potential=FREE, kind=BasisKind.DIRICHLET, N=5), 1.0
        )
        scaled = assemble(
            HamiltonianSpec(
                alpha=1.5, potential=FREE, kind=BasisKind.DIRICHLET, N=5, d_alpha=3.0, hbar=2.0
            ),
            1.0,
        )
        factor = 3.0 * 2.0**1.5
        assert np.abs(scaled.entries - factor * base.entries).max() <= 1e-12 * np.abs(
            scaled.entries
        ).max()

    def test_trace_identity(self):
        spec = HamiltonianSpec(alpha=1.3, potential=HARMONIC, kind=BasisKind.DIRICHLET, N=8)
        H = assemble(spec, 2.5)
        assert trace(H) == pytest.approx(float(np.trace(H.entries)), rel=1e-15)

    def test_parsed_potential_accepted(self):
        from fraclap import parse

        spec = HamiltonianSpec(
            alpha=2.0, potential=parse("x^2"), kind=BasisKind.DIRICHLET, N=5
        )
        H = assemble(spec, 3.0)
        np.testing.assert_allclose(
            np.diag(H.entries)
            - np.diag(
                assemble(
                    HamiltonianSpec(alpha=2.0, potential=FREE, kind=BasisKind.DIRICHLET, N=5),
                    3.0,
                ).entries
            ),
            H.grid.points**2,
            atol=1e-14,
        )

    def test_nonfinite_potential_rejected(self):
        spec = HamiltonianSpec(
            alpha=1.5,
            potential=lambda x: float("inf") if x > 0 else 0.0,
            kind=BasisKind.DIRICHLET,
            N=5,
        )
        with pytest.raises(EvaluationError):
            assemble(spec, 1.0)

    def test_failing_potential_names_point(self):
        def bad(x):
            raise ValueError("boom")

        spec = HamiltonianSpec(alpha=1.5, potential=bad, kind=BasisKind.DIRICHLET, N=4)
        with pytest.raises(EvaluationError):
            assemble(spec, 1.0)

    @pytest.mark.parametrize("field, value", [("alpha", 0.0), ("d_alpha", -1.0), ("hbar", 0.0)])
    def test_spec_validation(self, field, value):
        kwargs = dict(alpha=1.5, potential=FREE, kind=BasisKind.DIRICHLET, N=5)
        kwargs[field] = value
        with pytest.raises(ParameterError):
            HamiltonianSpec(**kwargs)


class TestPms:
    def test_trace_matches_full_assembly(self):
        # the fast diagonal route must agree with trace(assemble(...))
        spec = HamiltonianSpec(alpha=1.5, potential=HARMONIC, kind=BasisKind.DIRICHLET, N=10)
        from fraclap.hamiltonian import _trace_of

        for L in (2.0, 5.0, 9.0):
            assert _trace_of(spec, L) == pytest.approx(trace(assemble(spec, L)), rel=1e-12)

    def test_minimum_property(self):
        # trace at L_pms must not exceed the trace anywhere on the scan
        spec = HamiltonianSpec(alpha=1.5, potential=HARMONIC, kind=BasisKind.DIRICHLET, N=10)
        res = find_pms_length(spec)
        assert res.converged
        assert all(res.trace_at_min <= t + 1e-9 * abs(t) for _, t in res.scan)

    def test_alpha2_harmonic_analytic_check(self):
        # for alpha = 2 the harmonic-oscillator trace is sum (n pi/2L)^2 + sum x_k^2,
        # minimized where the two scale terms balance; verify stationarity numerically
        spec = HamiltonianSpec(alpha=2.0, potential=HARMONIC, kind=BasisKind.DIRICHLET, N=10)
        from fraclap.hamiltonian import _trace_of

        res = find_pms_length(spec)
        L = res.L_pms
        h = 1e-4
        deriv = (_trace_of(spec, L + h) - _trace_of(spec, L - h)) / (2 * h)
        curvature = (_trace_of(spec, L + h) - 2 * _trace_of(spec, L) + _trace_of(spec, L - h)) / h**2
        assert abs(deriv) <= 1e-2 * abs(curvature * L)

    def test_edge_minimum_flagged(self):
        # a bracket entirely to the left of the optimum puts the minimum on
        # the right edge: converged must be False
        spec = HamiltonianSpec(alpha=1.5, potential=HARMONIC, kind=BasisKind.DIRICHLET, N=10)
        res = find_pms_length(spec, bracket=(0.5, 2.0))
        assert not res.converged
        assert res.L_pms == pytest.approx(2.0)

    def test_bad_bracket(self):
        spec = HamiltonianSpec(alpha=1.5, potential=HARMONIC, kind=BasisKind.DIRICHLET, N=5)
        with pytest.raises(ParameterError):
            find_pms_length(spec, bracket=(3.0, 1.0))

    def test_eigenvalues_insensitive_near_pms(self):
        # the whole point of the construction: E_0 varies slowly in L at L_pms
        spec = HamiltonianSpec(alpha=1.5, potential=HARMONIC, kind=BasisKind.DIRICHLET, N=10)
        res = find_pms_length(spec)
        e = lambda L: eigendecompose(assemble(spec, L)).eigenvalues[0]
        e0 = e(res.L_pms)
        near = max(abs(e(res.L_pms * 1.05) - e0), abs(e(res.L_pms * 0.95) - e0))
        far = abs(e(res.L_pms * 0.5) - e0)
        assert near <= 2e-3
        assert near < 0.1 * far


class TestMomentumSpace:
    def test_alpha2_gives_harmonic_levels(self):
        # alpha = 2 in the momentum representation is again p^2 + p^2-type
        # oscillator: levels 2n + 1 after the x <-> p swap
        H = momentum_space_oscillator(2.0, 40, 8.0)
        ev = np.sort(np.linalg.eigvalsh(H.entries))[:5]
        np.testing.assert_allclose(ev, [1, 3, 5, 7, 9], atol=1e-8)

    def test_matches_position_space(self):
        # alpha = 3/2 oscillator: both representations converge to the same
        # spectrum; compare moderately converged values loosely
        pos_spec = HamiltonianSpec(
            alpha=1.5, potential=HARMONIC, kind=BasisKind.DIRICHLET, N=60
        )
        L = find_pms_length(pos_spec).L_pms
        pos = eigendecompose(assemble(pos_spec, L)).eigenvalues[:3]
        mom_L = find_momentum_pms_length(1.5, 60, bracket=(0.5, 40.0)).L_pms
        mom = np.sort(np.linalg.eigvalsh(momentum_space_oscillator(1.5, 60, mom_L).entries))[:3]
        assert np.abs(pos - mom).max() <= 5e-3

    def test_rejects_bad_alpha(self):
        with pytest.raises(ParameterError):
            momentum_space_oscillator(-1.0, 10, 5.0)
