"""Quartic oscillator with a fractional kinetic term: evenly spaced levels.

For alpha = 4/3 and V = x^4 the semiclassical exponent alpha*beta/(alpha+beta)
equals 1, so the WKB spectrum is a straight line in n, like the ordinary
harmonic oscillator.  The computed levels confirm this, with the ground
state sitting slightly above the line (WKB is a large-n approximation).
"""

import numpy as np

from fraclap import (
    BasisKind,
    HamiltonianSpec,
    WkbModel,
    assemble,
    eigendecompose,
    find_pms_length,
    wkb_energy,
)
from fraclap.jobs import fit_levels

alpha, beta, N = 4.0 / 3.0, 4.0, 50
spec = HamiltonianSpec(alpha=alpha, potential=lambda x: x**4, kind=BasisKind.DIRICHLET, N=N)
pms = find_pms_length(spec)
levels = eigendecompose(assemble(spec, pms.L_pms)).eigenvalues[:11]
model = WkbModel(alpha=alpha, beta=beta)

print(f"alpha = 4/3, V = x^4, N = {N}, L_pms = {pms.L_pms:.3f}")
print(f"{'n':>3} {'E_n':>12} {'WKB':>12} {'diff':>10}")
for n, e in enumerate(levels):
    w = wkb_energy(model, n)
    print(f"{n:>3} {e:12.6f} {w:12.6f} {e - w:10.6f}")

intercept, slope, _ = fit_levels(np.arange(1, 11), levels[1:])
print(f"\nleast-squares line through n = 1..10: E_n = {intercept:.4f} + {slope:.4f} n")
print(f"WKB slope 2*pi / (Gamma(1/4) Gamma(7/4)) = {model.prefactor:.6f}")
