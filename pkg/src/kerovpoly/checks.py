"""The verification suite behind ``kerovpoly check``."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, TextIO
import sys

from .characters import normalized_on_cycle
from .kerov import kerov_polynomial, recover_R, sigma_formula2, sigma_formula3
from .polyring import GradedPolynomial, R, monomial_weight
from .render import to_text
from .young import free_cumulants, partitions


@dataclass
class Failure:
    check: str
    detail: str


@dataclass
class CheckReport:
    failures: List[Failure] = field(default_factory=list)
    lines: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def structural_problems(k: int, s: GradedPolynomial) -> List[str]:
    """Ways in which ``s`` fails to look like a Kerov polynomial ``Sigma_k``."""
    problems = []
    if s.constant_term:
        problems.append(f"constant term {s.constant_term}")
    top = R(k + 1)
    if s.coefficient(next(iter(top.terms))) != 1:
        problems.append(f"coefficient of R_{k + 1} is not 1")
    rest = s - top
    if rest and rest.max_weight() > k - 1:
        problems.append("monomial of weight >= k other than R_{k+1}")
    for m, c in s.items():
        w = monomial_weight(m)
        if w > k + 1 or (w - k - 1) % 2:
            problems.append(f"monomial of weight {w} violates bound/parity")
            break
    for m, c in s.items():
        if c < 0 or c.denominator != 1:
            problems.append(f"coefficient {c} is not a nonnegative integer")
            break
    extra = s.variables() - set(range(2, k + 2))
    if extra:
        problems.append(f"uses variables {sorted(extra)} beyond R_{k + 1}")
    return problems


def run_checks(nmax: int, kmax: int,
               sigma: Optional[Callable[[int], GradedPolynomial]] = None,
               stream: Optional[TextIO] = None) -> CheckReport:
    """Run every check and print a pass/fail matrix to ``stream``.

    ``sigma`` replaces the shifted-product route as the polynomial under test
    (used to exercise the failure path).
    """
    sigma = sigma or kerov_polynomial
    stream = stream or sys.stdout
    report = CheckReport()

    def emit(line=""):
        report.lines.append(line)
        print(line, file=stream)

    def fail(check, detail):
        report.failures.append(Failure(check, detail))

    emit(f"{'k':>3}  agree  recover  invariants")
    for k in range(1, kmax + 1):
        s = sigma(k)
        s2, s3 = sigma_formula2(k).sigma, sigma_formula3(k).sigma
        agree = s == s2 == s3
        if not agree:
            fail("agreement", f"k={k}: formula1 {to_text(s)} | formula2 {to_text(s2)} | formula3 {to_text(s3)}")
        rec = recover_R(k) == R(k + 1)
        if not rec:
            fail("recover_R", f"k={k}: got {to_text(recover_R(k))}, expected R_{k + 1}")
        probs = structural_problems(k, s)
        if probs:
            fail("invariants", f"k={k}: {to_text(s)}: " + "; ".join(probs))
        emit(f"{k:>3}  {'pass' if agree else 'FAIL':>5}  {'pass' if rec else 'FAIL':>7}  "
             f"{'pass' if not probs else 'FAIL':>10}")

    if nmax >= 1:
        emit()
        emit("character identity (n rows, k columns; . pass, X fail)")
        emit("  n  " + " ".join(f"{k:>2}" for k in range(1, min(nmax, kmax) + 1)))
    for n in range(1, nmax + 1):
        row = []
        for k in range(1, min(n, kmax) + 1):
            s = sigma(k)
            ok = True
            for lam in partitions(n):
                lhs = s.evaluate(free_cumulants(lam, k + 1))
                rhs = normalized_on_cycle(lam, k)
                if lhs != rhs:
                    ok = False
                    fail("character", f"lambda=({lam}), k={k}: Sigma_k(R(lambda)) = {lhs}, "
                                      f"(n)_k chi/dim = {rhs}")
                    break
            row.append(" ." if ok else " X")
        emit(f"{n:>3}  " + " ".join(row))

    emit()
    if report.passed:
        emit("all checks passed")
    else:
        first = report.failures[0]
        emit(f"FAILED ({len(report.failures)} failures); first counterexample [{first.check}]: {first.detail}")
    return report
