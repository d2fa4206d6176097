"""
Kerov polynomials three ways
============================

Compute Sigma_1 ... Sigma_8 with each of the three residue formulas and
print them side by side with their LaTeX form.
"""
import time

from kerovpoly import sigma
from kerovpoly.render import sigma_text, to_latex

for k in range(1, 9):
    results = {}
    for formula in (1, 2, 3):
        start = time.perf_counter()
        results[formula] = sigma(k, formula).sigma
        results[formula, "ms"] = 1000 * (time.perf_counter() - start)
    assert results[1] == results[2] == results[3]
    print(sigma_text(k, results[1]))
    print("    latex:", to_latex(results[1]))
    print("    ms:", ", ".join(f"formula {f}: {results[f, 'ms']:.1f}" for f in (1, 2, 3)))

###############################################################################
# The ingredients of the first route: L, its compositional inverse H, and
# the coefficients B_j of H.

from kerovpoly import build_H, build_L

print(build_L(3))
H, B = build_H(4)
for j, b in B.items():
    print(f"B_{j} =", b)
