"""
Free cumulants of a Young diagram
=================================

Take the diagram 4+3+1, read off the minima and maxima of its profile, expand
G(z) = prod(z - y) / prod(z - x) at infinity and extract the free cumulants.
"""
from kerovpoly import Partition, free_cumulants, interlacing
from kerovpoly.young import g_series

lam = Partition.parse("4,3,1")
pair = interlacing(lam)
print("minima:", pair.minima)
print("maxima:", pair.maxima)
print("G(z) =", g_series(lam, -8))

for k, value in free_cumulants(lam, 8).items():
    print(f"R_{k} = {value}")

###############################################################################
# R_2 is always the number of boxes, and a self-conjugate diagram has
# vanishing odd cumulants.

sym = Partition((3, 2, 1))
assert sym == sym.conjugate()
print(sym, free_cumulants(sym, 7))
