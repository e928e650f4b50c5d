"""Fractional Mathieu equation: characteristic values and symmetry labels.

|p|^alpha y + 2 q cos(2z) y = a y on the periodic grid with L = pi.  The
four lowest eigenvalues are the characteristic values a_0, b_1, a_1, b_2;
their parity (even/odd) and minimal period (pi or 2 pi) come straight from
the eigenvectors.
"""

import math

from fraclap import BasisKind, HamiltonianSpec, assemble, classify_parity, eigendecompose

q = 1.0
N = 50

print(f"fractional Mathieu equation, q = {q:g}, N = {N}")
print(f"{'alpha':>6} {'a0':>22} {'b1':>22} {'a1':>22} {'b2':>22}")
for alpha in (1.0, 1.5, 2.0, 2.5, 3.0):
    spec = HamiltonianSpec(
        alpha=alpha,
        potential=lambda x: 2.0 * q * math.cos(2.0 * x),
        kind=BasisKind.PERIODIC,
        N=N,
    )
    spectrum = eigendecompose(assemble(spec, math.pi))
    labels = classify_parity(spectrum)
    row = " ".join(f"{e:22.16f}" for e in spectrum.eigenvalues[:4])
    print(f"{alpha:>6.2f} {row}")

print("\nlabels of the four lowest states (same for every alpha):")
for i, (parity, period) in enumerate(labels[:4]):
    period_txt = "2*pi" if period == "2L" else "pi"
    print(f"  state {i}: {parity:5s}  minimal period {period_txt}")
