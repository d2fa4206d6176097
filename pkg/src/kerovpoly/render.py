"""Text, JSON and LaTeX renderings of Kerov polynomials, with parsers back."""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Tuple

from .polyring import GradedPolynomial, monomial_exponents, monomial_from_exponents


def _latex_index(n: int) -> str:
    return str(n) if n < 10 else "{" + str(n) + "}"


def _monomial_text(exps) -> str:
    return " ".join(f"R_{j}" if e == 1 else f"R_{j}^{e}" for j, e in exps.items())


def _monomial_latex(exps) -> str:
    return "".join(
        f"R_{_latex_index(j)}" + ("" if e == 1 else f"^{_latex_index(e)}")
        for j, e in exps.items()
    )


def _coeff_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def _join(pieces) -> str:
    """``pieces`` is a list of (negative, body); produce ``a + b - c``."""
    out = ""
    for i, (neg, body) in enumerate(pieces):
        if i == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out or "0"


def to_text(p: GradedPolynomial) -> str:
    """``R_5 + 5 R_3`` style."""
    pieces = []
    for m, c in p.items():
        mono = _monomial_text(monomial_exponents(m))
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag} {mono}"
        pieces.append((c < 0, body))
    return _join(pieces)


def to_latex(p: GradedPolynomial) -> str:
    """``R_6 + 15R_4 + 5R_2^2 + 8R_2`` style."""
    pieces = []
    for m, c in p.items():
        mono = _monomial_latex(monomial_exponents(m))
        mag = abs(c)
        if not mono:
            body = _coeff_latex(mag)
        elif mag == 1:
            body = mono
        else:
            body = _coeff_latex(mag) + mono
        pieces.append((c < 0, body))
    return _join(pieces)


def sigma_text(k: int, p: GradedPolynomial) -> str:
    return f"Sigma_{k} = {to_text(p)}"


def to_document(k: int, formula: str, p: GradedPolynomial) -> dict:
    return {
        "k": k,
        "formula": str(formula),
        "terms": [
            {"coeff": str(c), "monomial": {str(j): e for j, e in monomial_exponents(m).items()}}
            for m, c in p.items()
        ],
    }


def to_json(k: int, formula: str, p: GradedPolynomial) -> str:
    return json.dumps(to_document(k, formula, p), separators=(",", ":"))


def from_document(doc: dict) -> Tuple[int, str, GradedPolynomial]:
    terms = {}
    for t in doc["terms"]:
        m = monomial_from_exponents({int(j): int(e) for j, e in t["monomial"].items()})
        terms[m] = terms.get(m, 0) + Fraction(t["coeff"])
    return int(doc["k"]), str(doc["formula"]), GradedPolynomial(terms)


def from_json(text: str) -> Tuple[int, str, GradedPolynomial]:
    return from_document(json.loads(text))


_LATEX_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<int>\d+)|\\frac\{(?P<num>\d+)\}\{(?P<den>\d+)\})?
        (?P<mono>(?:R_(?:\d|\{\d+\})(?:\^(?:\d|\{\d+\}))?)*)\s*""",
    re.VERBOSE,
)
_LATEX_FACTOR = re.compile(r"R_(\d|\{\d+\})(?:\^(\d|\{\d+\}))?")


def from_latex(text: str) -> GradedPolynomial:
    """Parse the output of :func:`to_latex`."""
    text = text.strip()
    if text == "0":
        return GradedPolynomial()
    terms = {}
    pos = 0
    first = True
    while pos < len(text):
        match = _LATEX_TERM.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse LaTeX polynomial at {text[pos:]!r}")
        if not first and match.group("sign") is None:
            raise ValueError(f"missing operator at {text[pos:]!r}")
        if match.group("int"):
            c = Fraction(int(match.group("int")))
        elif match.group("num"):
            c = Fraction(int(match.group("num")), int(match.group("den")))
        elif match.group("mono"):
            c = Fraction(1)
        else:
            raise ValueError(f"empty term at {text[pos:]!r}")
        if match.group("sign") == "-":
            c = -c
        exps = {}
        for j, e in _LATEX_FACTOR.findall(match.group("mono")):
            j = int(j.strip("{}"))
            exps[j] = exps.get(j, 0) + (int(e.strip("{}")) if e else 1)
        m = monomial_from_exponents(exps)
        terms[m] = terms.get(m, 0) + c
        pos = match.end()
        first = False
    return GradedPolynomial(terms)
