"""
The operator series P_m
=======================

Build C(z) = F(1/z) for k = 6 and compare the two constructions of the
series P_m that enter the third formula.
"""
from kerovpoly.kerov import build_F, gr_P, gr_P_nested
from kerovpoly.laurent import flip_variable

k = 6
C = flip_variable(build_F(k)).truncate(k + 1)
print("C(z) =", C)
for m in range(1, 5):
    p = gr_P(m, C)
    print(f"P_{m} =", p)
    if m >= 2:
        print("    nested construction agrees:", p.agrees_with(gr_P_nested(m, C)))
