"""Truncated Laurent series over :class:`GradedPolynomial` coefficients.

:class:`DescendingSeries` is an expansion at infinity,
``sum_{d=floor}^{top} c_d z^d + O(z^(floor-1))``.  Nothing below ``floor``
is known; asking for it raises :class:`BelowTruncation` instead of
pretending it is zero.  Every operation computes the floor its result is
actually good to.

:class:`AscendingSeries` is the mirror image at 0 under ``z -> 1/z``,
``sum_{d=bottom}^{ceiling} c_d z^d + O(z^(ceiling+1))``.  It is stored as
the mirrored descending series, so its arithmetic inherits the same
precision bookkeeping.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, List, Mapping, Optional, Tuple

from .polyring import (
    ONE,
    ZERO,
    GradedPolynomial,
    Monomial,
    Scalar,
    accumulate_product,
    as_poly,
    from_raw,
)


class TruncationError(ArithmeticError):
    pass


class BelowTruncation(TruncationError):
    def __init__(self, degree: int, floor: int):
        super().__init__(f"coefficient of z^{degree} requested but series is only known down to z^{floor}")
        self.degree = degree
        self.floor = floor


class AboveTruncation(TruncationError):
    def __init__(self, degree: int, ceiling: int):
        super().__init__(f"coefficient of z^{degree} requested but series is only known up to z^{ceiling}")
        self.degree = degree
        self.ceiling = ceiling


class NonUnitLeading(ArithmeticError):
    pass


class BadCompositionShape(ValueError):
    pass


class PositiveTopDegree(ValueError):
    pass


class DescendingSeries:
    """Immutable truncated Laurent series at infinity."""

    __slots__ = ("floor", "_c")

    def __init__(self, coeffs: Mapping[int, object], floor: int):
        for d in coeffs:
            if d < floor:
                raise ValueError(f"degree {d} lies below floor {floor}")
        hi = max([d for d, c in coeffs.items() if as_poly(c)], default=floor)
        c = [ZERO] * (hi - floor + 1)
        for d, v in coeffs.items():
            if d <= hi:
                c[d - floor] = as_poly(v)
        self.floor = floor
        self._c = c

    @classmethod
    def _raw(cls, floor: int, c: List[GradedPolynomial]) -> "DescendingSeries":
        while len(c) > 1 and not c[-1]:
            c.pop()
        if not c:
            c = [ZERO]
        s = cls.__new__(cls)
        s.floor = floor
        s._c = c
        return s

    @classmethod
    def monomial(cls, degree: int, floor: int, coeff=1) -> "DescendingSeries":
        """``coeff * z**degree``, known exactly down to ``floor``."""
        return cls({degree: coeff} if degree >= floor else {}, floor)

    @classmethod
    def zero(cls, floor: int) -> "DescendingSeries":
        return cls._raw(floor, [ZERO])

    @property
    def top(self) -> int:
        return self.floor + len(self._c) - 1

    def is_zero(self) -> bool:
        return not any(self._c)

    def coefficient(self, d: int) -> GradedPolynomial:
        if d < self.floor:
            raise BelowTruncation(d, self.floor)
        if d > self.top:
            return ZERO
        return self._c[d - self.floor]

    def residue(self) -> GradedPolynomial:
        return self.coefficient(-1)

    def coefficients(self) -> Dict[int, GradedPolynomial]:
        """Nonzero retained coefficients keyed by degree."""
        return {self.floor + i: c for i, c in enumerate(self._c) if c}

    def truncate(self, floor: int) -> "DescendingSeries":
        """Forget everything below ``floor`` (which must not be below the current floor)."""
        if floor < self.floor:
            raise BelowTruncation(floor, self.floor)
        if floor > self.top:
            return DescendingSeries.zero(floor)
        return DescendingSeries._raw(floor, self._c[floor - self.floor:])

    def shift(self, n: int) -> "DescendingSeries":
        """Multiply by ``z**n``."""
        return DescendingSeries._raw(self.floor + n, list(self._c))

    def scale(self, c) -> "DescendingSeries":
        c = as_poly(c)
        return DescendingSeries._raw(self.floor, [c * x if x else ZERO for x in self._c])

    def agrees_with(self, other: "DescendingSeries") -> bool:
        """Equal on every degree both series know."""
        f = max(self.floor, other.floor)
        return self.truncate(f) == other.truncate(f)

    def __add__(self, other) -> "DescendingSeries":
        if not isinstance(other, DescendingSeries):
            return self + DescendingSeries.monomial(0, self.floor, other)
        return series_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "DescendingSeries":
        return DescendingSeries._raw(self.floor, [-x for x in self._c])

    def __sub__(self, other) -> "DescendingSeries":
        return self + (-other)

    def __mul__(self, other) -> "DescendingSeries":
        if isinstance(other, DescendingSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction, GradedPolynomial)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, DescendingSeries):
            return NotImplemented
        return self.floor == other.floor and self._c == other._c

    def __hash__(self):
        return hash((self.floor, tuple(self._c)))

    def __repr__(self) -> str:
        terms = [f"({c})*z^{d}" for d, c in sorted(self.coefficients().items(), reverse=True)]
        body = " + ".join(terms) if terms else "0"
        return f"<{body} + O(z^{self.floor - 1})>"


# ----------------------------------------------------------------------
# descending arithmetic


def series_add(a: DescendingSeries, b: DescendingSeries) -> DescendingSeries:
    floor = max(a.floor, b.floor)
    top = max(a.top, b.top)
    c = [ZERO] * (top - floor + 1)
    for s in (a, b):
        for i, x in enumerate(s._c):
            d = s.floor + i
            if d >= floor and x:
                c[d - floor] = c[d - floor] + x
    return DescendingSeries._raw(floor, c)


def series_mul(a: DescendingSeries, b: DescendingSeries,
               floor: Optional[int] = None) -> DescendingSeries:
    """Product of two truncated series.

    The result is exact down to ``max(top_a + floor_b, top_b + floor_a)``.
    Passing ``floor`` asks for a shallower result and skips the work below it.
    """
    natural = max(a.top + b.floor, b.top + a.floor)
    lo = natural if floor is None else max(natural, floor)
    top = a.top + b.top
    if top < lo:
        return DescendingSeries.zero(lo)
    acc: List[Dict[Monomial, Fraction]] = [{} for _ in range(top - lo + 1)]
    for i, x in enumerate(a._c):
        if not x:
            continue
        da = a.floor + i
        start = max(0, lo - da - b.floor)
        for j in range(start, len(b._c)):
            y = b._c[j]
            if y:
                accumulate_product(acc[da + b.floor + j - lo], x, y)
    return DescendingSeries._raw(lo, [from_raw(t) for t in acc])


def series_derivative(f: DescendingSeries) -> DescendingSeries:
    # the unknown tail O(z^(floor-1)) differentiates to O(z^(floor-2))
    c = [x.scale(f.floor + i) if x else ZERO for i, x in enumerate(f._c)]
    return DescendingSeries._raw(f.floor - 1, c)


def series_coefficient(f: DescendingSeries, d: int) -> GradedPolynomial:
    return f.coefficient(d)


def residue(f: DescendingSeries) -> GradedPolynomial:
    return f.coefficient(-1)


def series_reciprocal(f: DescendingSeries) -> DescendingSeries:
    """``1/f`` for ``f`` whose leading coefficient is a nonzero rational.

    Writing ``f = u z^t (1 + w)``, the result is ``u^-1 z^-t sum (-w)^n``,
    generated coefficient by coefficient.  ``f`` known through ``N = t - floor``
    descending steps gives ``1/f`` through the same number of steps.
    """
    lead = f._c[-1]
    if not lead or not lead.is_constant():
        raise NonUnitLeading(f"leading coefficient {lead} is not a nonzero constant")
    t = f.top
    uinv = 1 / lead.constant_term
    a = f._c[::-1]  # a[i] is the coefficient of z^(t-i)
    g = [ONE.scale(uinv)]
    for m in range(1, len(a)):
        acc: Dict[Monomial, Fraction] = {}
        for i in range(1, m + 1):
            if a[i] and g[m - i]:
                accumulate_product(acc, a[i], g[m - i])
        g.append(from_raw(acc).scale(-uinv))
    n = len(a) - 1
    return DescendingSeries._raw(-t - n, g[::-1])


def taylor_shift(f: DescendingSeries, a: Scalar) -> DescendingSeries:
    """``f(z - a) = sum_r (-a)^r / r! f^(r)(z)``, to the floor of ``f``."""
    a = Fraction(a)
    if not a:
        return f
    out = f
    deriv = f
    r = 0
    while True:
        r += 1
        deriv = series_derivative(deriv)
        if deriv.is_zero() or deriv.top < f.floor:
            break
        out = out + deriv.truncate(f.floor).scale((-a) ** r / factorial(r))
    return out


def _binomial(d: int, n: int) -> Fraction:
    num = 1
    for i in range(n):
        num *= d - i
    return Fraction(num, factorial(n))


def _check_change_of_variable(g: DescendingSeries) -> None:
    if g.top != 1 or g.coefficient(1) != ONE:
        raise BadCompositionShape("inner series must have the form z + O(z^-1)")
    if g.floor > 0 or g.coefficient(0):
        raise BadCompositionShape("inner series must have zero (known) constant term")


def series_compose(f: DescendingSeries, g: DescendingSeries) -> DescendingSeries:
    """``f(g(z))`` for ``g = z + O(z^-1)``.

    With ``g = z(1 + w)``, each ``z^d`` becomes ``z^d sum_n binom(d, n) w^n``.
    The result is good to ``max(floor_f, top_f + floor_g - 1)``.
    """
    _check_change_of_variable(g)
    if g.floor < 0:
        w = DescendingSeries._raw(g.floor - 1, g._c[:-2])
    else:
        w = DescendingSeries.zero(g.floor - 1)
    lo = max(f.floor, f.top + g.floor - 1)
    if f.is_zero():
        return DescendingSeries.zero(lo)

    deepest = lo - f.top  # z^top needs the most relative precision
    powers = [None, w]
    out = DescendingSeries.zero(lo)
    for i, coeff in enumerate(f._c):
        if not coeff:
            continue
        d = f.floor + i
        need = lo - d
        total = DescendingSeries.monomial(0, need)
        n = 1
        while True:
            if n == len(powers):
                powers.append(series_mul(powers[-1], w, floor=deepest))
            piece = powers[n]
            if n > 1 and (piece.is_zero() or piece.top < need):
                break
            total = total + piece.truncate(max(piece.floor, need)).scale(_binomial(d, n))
            if piece.is_zero():
                break
            n += 1
        out = out + total.shift(d).scale(coeff)
    return out


def compositional_inverse(f: DescendingSeries) -> DescendingSeries:
    """The series ``g = z + O(z^-1)`` with ``f(g(z)) = z`` to the floor of ``f``.

    Fixed-point iteration ``g <- g - (f(g) - z)``; each pass fixes at least one
    more descending degree, so the loop is bounded by the retained range.
    """
    _check_change_of_variable(f)
    z = DescendingSeries.monomial(1, f.floor)
    g = z
    for _ in range(f.top - f.floor + 2):
        delta = series_compose(f, g) - z
        if delta.is_zero():
            return g
        g = g - delta
    raise RuntimeError("compositional inverse failed to converge")  # pragma: no cover


# ----------------------------------------------------------------------
# ascending series


class AscendingSeries:
    """Immutable truncated power series at 0."""

    __slots__ = ("_m",)

    def __init__(self, coeffs: Mapping[int, object], ceiling: int):
        self._m = DescendingSeries({-d: c for d, c in coeffs.items()}, -ceiling)

    @classmethod
    def _from_mirror(cls, m: DescendingSeries) -> "AscendingSeries":
        s = cls.__new__(cls)
        s._m = m
        return s

    @classmethod
    def monomial(cls, degree: int, ceiling: int, coeff=1) -> "AscendingSeries":
        return cls._from_mirror(DescendingSeries.monomial(-degree, -ceiling, coeff))

    @property
    def bottom(self) -> int:
        return -self._m.top

    @property
    def ceiling(self) -> int:
        return -self._m.floor

    def is_zero(self) -> bool:
        return self._m.is_zero()

    def coefficient(self, d: int) -> GradedPolynomial:
        if d > self.ceiling:
            raise AboveTruncation(d, self.ceiling)
        return self._m.coefficient(-d)

    def coefficients(self) -> Dict[int, GradedPolynomial]:
        return {-d: c for d, c in self._m.coefficients().items()}

    def truncate(self, ceiling: int) -> "AscendingSeries":
        if ceiling > self.ceiling:
            raise AboveTruncation(ceiling, self.ceiling)
        return AscendingSeries._from_mirror(self._m.truncate(-ceiling))

    def shift(self, n: int) -> "AscendingSeries":
        """Multiply by ``z**n``."""
        return AscendingSeries._from_mirror(self._m.shift(-n))

    def scale(self, c) -> "AscendingSeries":
        return AscendingSeries._from_mirror(self._m.scale(c))

    def agrees_with(self, other: "AscendingSeries") -> bool:
        return self._m.agrees_with(other._m)

    def __add__(self, other) -> "AscendingSeries":
        if not isinstance(other, AscendingSeries):
            other = AscendingSeries.monomial(0, self.ceiling, other)
        return asc_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "AscendingSeries":
        return AscendingSeries._from_mirror(-self._m)

    def __sub__(self, other) -> "AscendingSeries":
        return self + (-other)

    def __mul__(self, other) -> "AscendingSeries":
        if isinstance(other, AscendingSeries):
            return asc_mul(self, other)
        if isinstance(other, (int, Fraction, GradedPolynomial)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, AscendingSeries):
            return NotImplemented
        return self._m == other._m

    def __hash__(self):
        return hash(("asc", self._m))

    def __repr__(self) -> str:
        terms = [f"({c})*z^{d}" for d, c in sorted(self.coefficients().items())]
        body = " + ".join(terms) if terms else "0"
        return f"<{body} + O(z^{self.ceiling + 1})>"


def asc_add(a: AscendingSeries, b: AscendingSeries) -> AscendingSeries:
    return AscendingSeries._from_mirror(series_add(a._m, b._m))


def asc_mul(a: AscendingSeries, b: AscendingSeries,
            ceiling: Optional[int] = None) -> AscendingSeries:
    """Product, exact up to ``min(bottom_a + ceiling_b, bottom_b + ceiling_a)``."""
    floor = None if ceiling is None else -ceiling
    return AscendingSeries._from_mirror(series_mul(a._m, b._m, floor=floor))


def asc_coefficient(f: AscendingSeries, d: int) -> GradedPolynomial:
    return f.coefficient(d)


def asc_D(f: AscendingSeries) -> AscendingSeries:
    """Euler operator ``z d/dz``: the degree-d coefficient is multiplied by d."""
    m = f._m
    c = [x.scale(-(m.floor + i)) if x else ZERO for i, x in enumerate(m._c)]
    return AscendingSeries._from_mirror(DescendingSeries._raw(m.floor, c))


def asc_reciprocal(f: AscendingSeries) -> AscendingSeries:
    return AscendingSeries._from_mirror(series_reciprocal(f._m))


def flip_variable(f):
    """Substitute ``z -> 1/z``, turning a descending series into an ascending one.

    Applied to an :class:`AscendingSeries` it flips back.
    """
    if isinstance(f, AscendingSeries):
        return f._m
    if f.top > 0:
        raise PositiveTopDegree(f"top degree {f.top} > 0 does not give a power series at 0")
    return AscendingSeries._from_mirror(f)
