"""
Characters on a cycle from free cumulants
=========================================

The value (n)_k chi(k-cycle) / dim of an irreducible character of S_n is
Sigma_k evaluated at the free cumulants of the diagram.  Compare it with the
Murnaghan-Nakayama rule for every diagram with 6 boxes.
"""
from kerovpoly import kerov_polynomial, free_cumulants, normalized_on_cycle, partitions

n = 6
header = "lambda".ljust(14) + "".join(f"k={k}".rjust(10) for k in range(1, n + 1))
print(header)
for lam in partitions(n):
    cumulants = free_cumulants(lam, n + 1)
    row = []
    for k in range(1, n + 1):
        value = kerov_polynomial(k).evaluate(cumulants)
        assert value == normalized_on_cycle(lam, k)
        row.append(str(value).rjust(10))
    print(str(lam).ljust(14) + "".join(row))

###############################################################################
# Past the size of the diagram the falling factorial vanishes, and so does
# the polynomial side.

lam = next(partitions(4))
print([kerov_polynomial(k).evaluate(free_cumulants(lam, k + 1)) for k in (5, 6)])
