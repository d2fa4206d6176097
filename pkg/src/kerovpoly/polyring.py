"""Sparse graded polynomials in the free cumulants R_2, R_3, ... over Q.

A monomial is stored as a tuple of exponents ``(e_2, e_3, ...)`` with
trailing zeros stripped, so ``()`` is the unit monomial and ``(0, 2)``
is ``R_3**2``.  Variable ``R_j`` has weight ``j``.

Coefficients are :class:`fractions.Fraction`; nothing is ever rounded.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]

FIRST_VARIABLE = 2


class MissingVariable(KeyError):
    """An evaluation met a variable index with no assigned value."""

    def __init__(self, index: int):
        super().__init__(index)
        self.index = index

    def __str__(self) -> str:
        return f"no value assigned to R_{self.index}"


def monomial_from_exponents(exponents: Mapping[int, int]) -> Monomial:
    """Encode ``{j: e}`` (j >= 2, e >= 0) as a canonical exponent tuple."""
    exps = {j: e for j, e in exponents.items() if e}
    if not exps:
        return ()
    for j, e in exps.items():
        if j < FIRST_VARIABLE:
            raise ValueError(f"variable index must be >= 2, got {j}")
        if e < 0:
            raise ValueError("negative exponent")
    vec = [0] * (max(exps) - FIRST_VARIABLE + 1)
    for j, e in exps.items():
        vec[j - FIRST_VARIABLE] = e
    return tuple(vec)


def monomial_exponents(m: Monomial) -> Dict[int, int]:
    """Decode an exponent tuple back to ``{j: e}`` with no zero entries."""
    return {i + FIRST_VARIABLE: e for i, e in enumerate(m) if e}


def monomial_weight(m: Monomial) -> int:
    return sum((i + FIRST_VARIABLE) * e for i, e in enumerate(m))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


def _canonical_key(m: Monomial):
    return (-monomial_weight(m), m)


class GradedPolynomial:
    """Immutable polynomial in R_2, R_3, ... with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            while m and m[-1] == 0:
                m = m[:-1]
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
                if not clean[m]:
                    del clean[m]
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, Fraction]) -> "GradedPolynomial":
        # Caller guarantees canonical keys and nonzero Fraction values.
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "GradedPolynomial":
        c = Fraction(c)
        return cls._wrap({(): c} if c else {})

    @classmethod
    def var(cls, j: int, power: int = 1) -> "GradedPolynomial":
        """The monomial ``R_j**power``."""
        return cls._wrap({monomial_from_exponents({j: power}): Fraction(1)})

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms in canonical order: descending weight, then ascending lex."""
        for m in sorted(self._terms, key=_canonical_key):
            yield m, self._terms[m]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def variables(self) -> set:
        out = set()
        for m in self._terms:
            out.update(monomial_exponents(m))
        return out

    def weight_profile(self) -> set:
        return {monomial_weight(m) for m in self._terms}

    def max_weight(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no weight")
        return max(self.weight_profile())

    def coefficient(self, exponents: Mapping[int, int] | Monomial) -> Fraction:
        if isinstance(exponents, Mapping):
            exponents = monomial_from_exponents(exponents)
        return self._terms.get(tuple(exponents), Fraction(0))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "GradedPolynomial":
        other = as_poly(other)
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return GradedPolynomial._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "GradedPolynomial":
        return GradedPolynomial._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "GradedPolynomial":
        return self + (-as_poly(other))

    def __rsub__(self, other) -> "GradedPolynomial":
        return as_poly(other) + (-self)

    def scale(self, c: Scalar) -> "GradedPolynomial":
        c = Fraction(c)
        if not c:
            return ZERO
        return GradedPolynomial._wrap({m: c * v for m, v in self._terms.items()})

    def __mul__(self, other) -> "GradedPolynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        accumulate_product(out, self, other)
        return GradedPolynomial._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GradedPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, c: Scalar) -> "GradedPolynomial":
        return self.scale(1 / Fraction(c))

    # -- comparison ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GradedPolynomial.constant(other)
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def evaluate(self, assignment: Mapping[int, Scalar]) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            value = c
            for i, e in enumerate(m):
                if e:
                    j = i + FIRST_VARIABLE
                    if j not in assignment:
                        raise MissingVariable(j)
                    value *= Fraction(assignment[j]) ** e
            total += value
        return total

    def __repr__(self) -> str:
        return f"GradedPolynomial({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            mono = "*".join(
                f"R{j}" if e == 1 else f"R{j}^{e}"
                for j, e in monomial_exponents(m).items()
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def accumulate_product(acc: Dict[Monomial, Fraction], a: GradedPolynomial,
                       b: GradedPolynomial) -> None:
    """Add ``a*b`` into the raw term dictionary ``acc`` in place.

    Zero entries may be left behind; finish with :func:`from_raw`.
    """
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            m = _mono_mul(ma, mb)
            acc[m] = acc.get(m, 0) + ca * cb


def from_raw(acc: Dict[Monomial, Fraction]) -> GradedPolynomial:
    return GradedPolynomial._wrap({m: c for m, c in acc.items() if c})


def as_poly(x) -> GradedPolynomial:
    if isinstance(x, GradedPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return GradedPolynomial.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial coefficient")


def R(j: int, power: int = 1) -> GradedPolynomial:
    """Shorthand for the variable ``R_j`` (optionally raised to ``power``)."""
    return GradedPolynomial.var(j, power)


def poly_sum(polys: Iterable[GradedPolynomial]) -> GradedPolynomial:
    acc: Dict[Monomial, Fraction] = {}
    for p in polys:
        for m, c in p._terms.items():
            acc[m] = acc.get(m, 0) + c
    return from_raw(acc)


ZERO = GradedPolynomial._wrap({})
ONE = GradedPolynomial._wrap({(): Fraction(1)})


def poly_add(a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
    return as_poly(a) + b


def poly_mul(a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
    return as_poly(a) * as_poly(b)


def poly_evaluate(p: GradedPolynomial, assignment: Mapping[int, Scalar]) -> Fraction:
    """Exact value of ``p`` with ``R_j -> assignment[j]``.

    Raises :class:`MissingVariable` if ``p`` uses an unassigned index.
    """
    return p.evaluate(assignment)


def poly_weight_profile(p: GradedPolynomial) -> set:
    return p.weight_profile()
