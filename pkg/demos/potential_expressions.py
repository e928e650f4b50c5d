"""The potential mini-language: parsing, evaluation, error reporting.

Potentials given as text ('x^4 - 2*x^2', '2*cos(2*x)', ...) are parsed
into an AST that can be evaluated pointwise, pretty-printed, and plugged
directly into a Hamiltonian.
"""

from fraclap import (
    BasisKind,
    EvaluationError,
    HamiltonianSpec,
    ParseError,
    assemble,
    eigendecompose,
    find_pms_length,
    parse,
    to_source,
)

for text in ("x^4 - 2*x^2", "abs(x)^1.5", "2*cos(2*x)", "exp(-x^2) * (1 + x^2)"):
    expr = parse(text)
    print(f"{text!r:30s} -> V(0.7) = {expr(0.7):.6f}, printed back: {to_source(expr)!r}")

# parse errors carry the character offset of the problem
for bad in ("x +", "sin x", "y^2"):
    try:
        parse(bad)
    except ParseError as exc:
        print(f"{bad!r:30s} -> parse error at column {exc.offset}: {exc}")

# evaluation errors name the sampling point that failed
try:
    parse("1 / x")(0.0)
except EvaluationError as exc:
    print(f"{'1 / x at x = 0':30s} -> {exc}")

# a parsed expression drops straight into a Hamiltonian
spec = HamiltonianSpec(
    alpha=2.0, potential=parse("x^4 - 2*x^2"), kind=BasisKind.DIRICHLET, N=30
)
pms = find_pms_length(spec)
ev = eigendecompose(assemble(spec, pms.L_pms)).eigenvalues[:3]
print(f"\ndouble well x^4 - 2 x^2 (alpha = 2): E0..E2 = {ev[0]:.6f}, {ev[1]:.6f}, {ev[2]:.6f}")
