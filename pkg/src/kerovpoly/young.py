"""Young diagrams, their interlacing corner data and numeric free cumulants."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Tuple

from .laurent import DescendingSeries, series_mul, series_reciprocal
from .polyring import GradedPolynomial


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise PartitionError(f"parts must be positive integers, got {p!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``"4,3,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise PartitionError(f"not a comma-separated list of integers: {text!r}") from None
        return cls(parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def boxes(self) -> Iterator[Tuple[int, int]]:
        """(row, column) of each box, 1-indexed."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield i, j

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    for parts in gen(n, n):
        yield Partition(parts)


@dataclass(frozen=True)
class InterlacingPair:
    minima: Tuple[int, ...]
    maxima: Tuple[int, ...]


def interlacing(lam: Partition) -> InterlacingPair:
    """Minima and maxima of the diagram's profile.

    Minima are the contents (column - row) of the addable corners, maxima the
    contents of the removable corners.
    """
    parts = list(lam.parts)
    ell = len(parts)
    addable = [parts[0] if parts else 0]  # (1, lambda_1 + 1)
    for i in range(2, ell + 2):
        above = parts[i - 2]
        here = parts[i - 1] if i <= ell else 0
        if above > here:
            addable.append(here + 1 - i)
    removable = []
    for i in range(1, ell + 1):
        below = parts[i] if i < ell else 0
        if parts[i - 1] > below:
            removable.append(parts[i - 1] - i)
    return InterlacingPair(tuple(sorted(addable)), tuple(sorted(removable)))


def _linear_product(roots, floor: int) -> DescendingSeries:
    # exact polynomial prod (z - r); coefficient list is lowest degree first
    c = [1]
    for r in roots:
        c = [a - r * b for a, b in zip([0] + c, c + [0])]
    return DescendingSeries({d: v for d, v in enumerate(c) if d >= floor}, floor)


def g_series(lam: Partition, floor: int) -> DescendingSeries:
    """``G(z) = prod (z - y_i) / prod (z - x_i)`` expanded at infinity down to ``floor``."""
    pair = interlacing(lam)
    m = len(pair.minima)
    # 1/den loses 2m degrees of floor relative to den; num has top m-1
    den = _linear_product(pair.minima, floor + m + 1)
    num = _linear_product(pair.maxima, floor + m)
    return series_mul(num, series_reciprocal(den), floor=floor)


def _numeric(p: GradedPolynomial) -> Fraction:
    if not p.is_constant():
        raise TypeError("expected a variable-free coefficient")
    return p.constant_term


def free_cumulants(lam: Partition, kmax: int) -> Dict[int, Fraction]:
    """``{k: R_k(lam)}`` for ``2 <= k <= kmax``.

    ``1/G`` is the compositional inverse of ``L(w) = K(1/w)``, so it plays
    the role of ``H`` and ``R_{k+1} = -(1/k) [z^-1] (1/G)^k``.
    """
    if kmax < 2:
        raise ValueError("kmax must be >= 2")
    # R_{k+1} needs H^k to floor -1, i.e. H to floor -k; H gains 2 on G.
    H = series_reciprocal(g_series(lam, -(kmax + 2)))
    out = {}
    power = None
    for k in range(1, kmax):
        power = H if power is None else series_mul(power, H)
        out[k + 1] = _numeric(power.residue()) * Fraction(-1, k)
    return out


def character_via_kerov(lam: Partition, k: int, sigma) -> Fraction:
    """``Sigma_k`` evaluated at the free cumulants of ``lam``.

    ``sigma`` is a :class:`~kerovpoly.kerov.KerovResult` for the same ``k``.
    """
    if sigma.k != k:
        raise ValueError(f"polynomial is Sigma_{sigma.k}, not Sigma_{k}")
    return sigma.sigma.evaluate(free_cumulants(lam, k + 1))
