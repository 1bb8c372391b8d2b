"""Splitting a fuzzy weak preference into strict preference and indifference.

Any reconstruction R = S(P, I) with P asymmetric and I symmetric forces
I = min(R, R^t); the canonical strict part is the residual
P(x,y) = inf{t : S(t, I(x,y)) >= R(x,y)}.  This script walks through the
classic two-element example, shows the closed forms the main conorms give,
and checks the crisp degeneration.
"""

import numpy as np

from fuzzdec import (
    FuzzyRelation,
    canonical_decompose,
    crisp_decompose,
    make_conorm,
    make_norm,
    residual,
    strong_decompose,
    verify_strong,
    verify_weak,
)

# x beats y decisively; both compare to themselves fully
R = FuzzyRelation(("x", "y"), np.array([[1.0, 1.0], [0.5, 1.0]]))
print("R =")
print(R.degrees)
print()

for spec in ("max", "lukasiewicz", "prob"):
    S = make_conorm(spec)
    d = canonical_decompose(R, S)
    print(f"canonical decomposition under {S.display_name}:")
    print("  P(x,y) =", d.strict.value("x", "y"), "  I(x,y) =", d.indifference.value("x", "y"))
    print(" ", verify_weak(R, d))
print()

print("The residual behind those numbers: inf{t : S(t, i) >= r}")
print("  max:        ", residual(make_conorm("max"), 0.5, 1.0))
print("  Lukasiewicz:", residual(make_conorm("lukasiewicz"), 0.3, 0.8), " (r - i)")
print("  probabilistic:", residual(make_conorm("prob"), 0.5, 0.75), " ((r-i)/(1-i))")
print()

print("Strong decompositions additionally need T(P, I) = 0:")
d = canonical_decompose(R, make_conorm("max"))
check = verify_strong(R, d, make_norm("min"))
print(f"  under the maximum the parts overlap: {check}")
d = strong_decompose(R, make_norm("lukasiewicz"), make_conorm("lukasiewicz"))
print(
    "  under the Lukasiewicz pair: P(x,y) =", d.strict.value("x", "y"),
    "and T(P,I) =", make_norm("lukasiewicz")(d.strict.value("x", "y"), 0.5),
)
print()

print("Crisp relations decompose to their crisp split under every continuous conorm:")
crisp = FuzzyRelation(("x", "y"), np.array([[1.0, 1.0], [0.0, 1.0]]))
P, I = crisp_decompose(crisp)
for spec in ("max", "lukasiewicz", "prob", "ordinal_sum"):
    d = canonical_decompose(crisp, make_conorm(spec))
    same = np.array_equal(d.strict.degrees, P.degrees) and np.array_equal(
        d.indifference.degrees, I.degrees
    )
    print(f"  {spec:12s} reproduces the crisp split exactly: {same}")
