"""Symmetric group characters by the Murnaghan-Nakayama rule.

Independent of the series machinery; used as ground truth.  Border strips
are removed on the beta-set (first-column hook lengths) of the shape: a rim
hook of length r is a bead moved from b to b - r into an empty slot, with
sign (-1)^(beads jumped over).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Tuple

from .young import Partition

CycleType = Partition


class SizeMismatch(ValueError):
    pass


class OutOfRange(ValueError):
    pass


def hook_lengths(lam: Partition):
    conj = lam.conjugate()
    return [lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in lam.boxes()]


def hook_dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam``."""
    return factorial(lam.n) // prod(hook_lengths(lam))


def _beta(parts: Tuple[int, ...]) -> Tuple[int, ...]:
    ell = len(parts)
    return tuple(p + ell - 1 - i for i, p in enumerate(parts))


def _from_beta(beta) -> Tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    ell = len(beta)
    parts = tuple(b - (ell - 1 - i) for i, b in enumerate(beta))
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(shape: Tuple[int, ...], cycles: Tuple[int, ...]) -> int:
    if not cycles:
        return 1
    r, rest = cycles[0], cycles[1:]
    beads = set(_beta(shape))
    total = 0
    for b in beads:
        if b - r >= 0 and b - r not in beads:
            jumped = sum(1 for c in beads if b - r < c < b)
            smaller = _from_beta((beads - {b}) | {b - r})
            total += (-1) ** jumped * _mn(smaller, rest)
    return total


def mn_character(lam: Partition, mu: CycleType) -> int:
    """``chi^lam`` on the class of cycle type ``mu``."""
    if lam.n != sum(mu.parts):
        raise SizeMismatch(f"|lambda| = {lam.n} but |mu| = {sum(mu.parts)}")
    return _mn(lam.parts, tuple(sorted(mu.parts, reverse=True)))


def falling_factorial(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def cycle_class(n: int, k: int) -> CycleType:
    """Cycle type ``(k, 1^(n-k))``."""
    return Partition((k,) + (1,) * (n - k))


def normalized_on_cycle(lam: Partition, k: int) -> Fraction:
    """``(n)_k chi^lam(k, 1^(n-k)) / dim(lam)``."""
    n = lam.n
    if not 1 <= k <= n:
        raise OutOfRange(f"cycle length {k} outside 1..{n}")
    return Fraction(falling_factorial(n, k) * mn_character(lam, cycle_class(n, k)),
                    hook_dimension(lam))


def class_size(mu: CycleType) -> int:
    """Number of permutations with cycle type ``mu``."""
    z = 1
    for part in set(mu.parts):
        m = mu.parts.count(part)
        z *= part ** m * factorial(m)
    return factorial(sum(mu.parts)) // z
