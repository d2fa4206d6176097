"""Kerov polynomials by three independent routes.

All three compute ``Sigma_k`` as a polynomial in the free cumulants:

1. residue of the shifted product ``H(z) H(z-1) ... H(z-k+1)`` where ``H``
   is the compositional inverse of ``L(z) = z + sum R_j z^(1-j)``;
2. residue of ``(1/F) prod_j (zeta + sum_r (-j)^r/r! (F d/dzeta)^(r-1) F)``
   with ``F = 1/L'``;
3. the coefficient of ``z^(k+1)`` in ``(1/C) prod_j (1 + sum_i j^i P_i)``
   with ``C(z) = F(1/z)`` and ``P_i`` the Goulden-Rattan operator series.

Every series is carried to floor ``-(k+2)`` (ceiling ``k+1`` at zero) with
variables ``R_2 ... R_{k+1}``; higher cumulants have weight too large to
reach ``Sigma_k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Tuple

from .laurent import (
    AscendingSeries,
    DescendingSeries,
    asc_D,
    asc_mul,
    asc_reciprocal,
    compositional_inverse,
    flip_variable,
    series_derivative,
    series_mul,
    series_reciprocal,
    taylor_shift,
)
from .polyring import GradedPolynomial, R

FORMULAS = (1, 2, 3)


@dataclass(frozen=True)
class KerovResult:
    k: int
    sigma: GradedPolynomial
    formula_id: int


def working_floor(k: int) -> int:
    return -(k + 2)


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def build_L(k: int) -> DescendingSeries:
    """``L(z) = z + R_2/z + R_3/z^2 + ... + R_{k+1} z^-k`` to floor ``-(k+2)``."""
    _check_k(k)
    coeffs = {1: 1}
    for j in range(2, k + 2):
        coeffs[1 - j] = R(j)
    return DescendingSeries(coeffs, working_floor(k))


@lru_cache(maxsize=None)
def _inverse_of_L(k: int) -> DescendingSeries:
    return compositional_inverse(build_L(k))


def build_H(k: int) -> Tuple[DescendingSeries, Dict[int, GradedPolynomial]]:
    """``H = L^(-1)`` together with its coefficients ``B_j``.

    ``H(z) = z - sum_j B_j z^(1-j)``; ``B_j`` is isobaric of weight ``j``.
    Returned for ``2 <= j <= k+1``.
    """
    _check_k(k)
    H = _inverse_of_L(k)
    B = {j: -H.coefficient(1 - j) for j in range(2, k + 2)}
    return H, B


def _residue_of_product(factors, k: int, tail: DescendingSeries | None = None):
    # Each pending factor has top degree 1 (tail has top 0), so a partial
    # product only needs degrees >= -1 - (number of factors still to come).
    remaining = len(factors)
    prod = None
    for f in factors:
        remaining -= 1
        need = -1 - remaining
        prod = f.truncate(max(f.floor, need)) if prod is None else series_mul(prod, f, floor=need)
    if tail is not None:
        prod = series_mul(tail, prod, floor=-1)
    return prod.residue()


@lru_cache(maxsize=None)
def _sigma1(k: int) -> GradedPolynomial:
    H, _ = build_H(k)
    factors = [taylor_shift(H, j) for j in range(k)]
    return _residue_of_product(factors, k).scale(Fraction(-1, k))


def sigma_formula1(k: int) -> KerovResult:
    """``Sigma_k = -(1/k) [z^-1] H(z) H(z-1) ... H(z-k+1)``."""
    _check_k(k)
    return KerovResult(k, _sigma1(k), 1)


def recover_R(k: int) -> GradedPolynomial:
    """``-(1/k) [z^-1] H(z)^k``, which must be exactly ``R_{k+1}``."""
    _check_k(k)
    H, _ = build_H(k)
    power = H
    for i in range(1, k):
        power = series_mul(power, H, floor=-1 - (k - 1 - i))
    return power.residue().scale(Fraction(-1, k))


@lru_cache(maxsize=None)
def build_F(k: int) -> DescendingSeries:
    """``F = 1/L'``, equal to ``1 + R_2 z^-2 + 2 R_3 z^-3 + ...``."""
    _check_k(k)
    return series_reciprocal(series_derivative(build_L(k))).truncate(working_floor(k))


def iterated_operator(F: DescendingSeries, r: int) -> DescendingSeries:
    """``(F d/dzeta)^(r-1) F``."""
    if r < 1:
        raise ValueError("r must be >= 1")
    out = F
    for _ in range(r - 1):
        out = series_mul(F, series_derivative(out))
    return out


def _operator_terms(F: DescendingSeries) -> List[DescendingSeries]:
    # (F d)^(r-1) F for r = 1, 2, ... until the top degree drops below F's floor;
    # each application lowers the top by at least one.
    terms = [F]
    while True:
        nxt = series_mul(F, series_derivative(terms[-1]), floor=F.floor)
        if nxt.is_zero() or nxt.top < F.floor:
            return terms
        terms.append(nxt)


@lru_cache(maxsize=None)
def _sigma2(k: int) -> GradedPolynomial:
    F = build_F(k)
    ops = _operator_terms(F)
    zeta = DescendingSeries.monomial(1, F.floor)
    factors = [zeta]
    for j in range(1, k):
        factor = zeta
        for r, term in enumerate(ops, start=1):
            factor = factor + term.scale(Fraction((-j) ** r, factorial(r)))
        factors.append(factor)
    tail = series_reciprocal(F)
    return _residue_of_product(factors, k, tail=tail).scale(Fraction(-1, k))


def sigma_formula2(k: int) -> KerovResult:
    """``Sigma_k`` from the residue of the ``F``-operator product."""
    _check_k(k)
    return KerovResult(k, _sigma2(k), 2)


def gr_P_sequence(C: AscendingSeries, mmax: int) -> List[AscendingSeries]:
    """``[P_1, ..., P_mmax]`` with ``P_m = -(1/m!) z (C z D)^(m-1) C``.

    In this normalization ``P_m`` already carries its factor ``z^m``; it is
    the term that multiplies ``j^m`` in the Goulden-Rattan product.
    """
    out = []
    X = C
    for m in range(1, mmax + 1):
        if m > 1:
            X = asc_mul(C, asc_D(X).shift(1))
        out.append(X.shift(1).scale(Fraction(-1, factorial(m))))
    return out


def gr_P(m: int, C: AscendingSeries) -> AscendingSeries:
    if m < 1:
        raise ValueError("m must be >= 1")
    return gr_P_sequence(C, m)[-1]


def gr_P_nested(m: int, C: AscendingSeries) -> AscendingSeries:
    """``P_m`` from ``-(1/m!) z^m C (D+(m-2)I)[C ... (D+I)[C D C]...]``.

    Only meaningful for ``m >= 2``; cross-checks :func:`gr_P`.
    """
    if m < 2:
        raise ValueError("nested form needs m >= 2")
    Y = asc_mul(C, asc_D(C))
    for j in range(1, m - 1):
        Y = asc_mul(C, asc_D(Y) + Y.scale(j))
    return Y.shift(m).scale(Fraction(-1, factorial(m)))


@lru_cache(maxsize=None)
def _sigma3(k: int) -> GradedPolynomial:
    ceiling = k + 1
    C = flip_variable(build_F(k)).truncate(ceiling)
    # P_i has bottom degree >= i, so terms past the ceiling vanish
    P = gr_P_sequence(C, ceiling)
    one = AscendingSeries.monomial(0, ceiling)
    prod = one
    for j in range(1, k):
        factor = one
        for i, p in enumerate(P, start=1):
            factor = factor + p.scale(j ** i)
        prod = asc_mul(prod, factor, ceiling=ceiling)
    total = asc_mul(asc_reciprocal(C), prod, ceiling=ceiling)
    return total.coefficient(k + 1).scale(Fraction(-1, k))


def sigma_formula3(k: int) -> KerovResult:
    """``Sigma_k = -(1/k) [z^(k+1)] (1/C) prod_{j<k} (1 + sum_i j^i P_i)``."""
    _check_k(k)
    return KerovResult(k, _sigma3(k), 3)


_DISPATCH = {1: sigma_formula1, 2: sigma_formula2, 3: sigma_formula3}


def sigma(k: int, formula: int = 1) -> KerovResult:
    try:
        fn = _DISPATCH[formula]
    except KeyError:
        raise ValueError(f"unknown formula {formula!r}; expected one of {FORMULAS}") from None
    return fn(k)


def kerov_polynomial(k: int) -> GradedPolynomial:
    """``Sigma_k`` (via the shifted-product route)."""
    return sigma_formula1(k).sigma


def clear_caches() -> None:
    """Drop memoized series and polynomials (for honest timings)."""
    for fn in (_inverse_of_L, build_F, _sigma1, _sigma2, _sigma3):
        fn.cache_clear()
