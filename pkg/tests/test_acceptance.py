"""Exit criteria for the package, one test per criterion.

Each criterion also reports a PASS/FAIL line in the pytest terminal summary;
``python tests/test_acceptance.py`` prints the same lines without pytest.
"""
import random
import time
from fractions import Fraction

import pytest

from kerovpoly import kerov
from kerovpoly.characters import normalized_on_cycle
from kerovpoly.checks import structural_problems
from kerovpoly.laurent import DescendingSeries, compositional_inverse, flip_variable, series_compose, taylor_shift
from kerovpoly.polyring import R
from kerovpoly.young import Partition, free_cumulants, interlacing, partitions

TABLE = {
    1: R(2),
    2: R(3),
    3: R(4) + R(2),
    4: R(5) + 5 * R(3),
    5: R(6) + 15 * R(4) + 5 * R(2, 2) + 8 * R(2),
}
KMAX = 10
N_RANDOM = 100


def criterion_table():
    kerov.clear_caches()
    start = time.perf_counter()
    bad = [(k, f) for f in kerov.FORMULAS for k in TABLE if kerov.sigma(k, f).sigma != TABLE[k]]
    elapsed = time.perf_counter() - start
    return not bad and elapsed < 1.0, f"mismatches={bad} time={elapsed:.2f}s (limit 1s)"


def criterion_agreement():
    start = time.perf_counter()
    bad = [k for k in range(1, KMAX + 1)
           if not kerov.sigma_formula1(k).sigma == kerov.sigma_formula2(k).sigma == kerov.sigma_formula3(k).sigma]
    elapsed = time.perf_counter() - start
    return not bad and elapsed < 300, f"k <= {KMAX}, disagreeing k={bad} time={elapsed:.1f}s (limit 300s)"


def criterion_recover():
    bad = [k for k in range(1, KMAX + 1) if kerov.recover_R(k) != R(k + 1)]
    return not bad, f"k <= {KMAX}, failing k={bad}"


def criterion_fig1():
    pair = interlacing(Partition((4, 3, 1)))
    ok = pair.minima == (-3, -1, 2, 4) and pair.maxima == (-2, 1, 3)
    return ok, f"x={pair.minima} y={pair.maxima}"


def criterion_characters():
    start = time.perf_counter()
    checked, bad = 0, []
    for n in range(1, 9):
        for lam in partitions(n):
            cumulants = free_cumulants(lam, n + 1)
            for k in range(1, n + 1):
                lhs = kerov.kerov_polynomial(k).evaluate(cumulants)
                rhs = normalized_on_cycle(lam, k)
                checked += 1
                if lhs != rhs:
                    bad.append((lam.parts, k, lhs, rhs))
    elapsed = time.perf_counter() - start
    return not bad and elapsed < 120, f"{checked} (lambda, k) pairs, failures={bad[:3]} time={elapsed:.1f}s (limit 120s)"


def _random_cov(rng, floor):
    coeffs = {1: 1}
    for d in range(-1, floor - 1, -1):
        if rng.random() < 0.7:
            c = Fraction(rng.randint(-3, 3), rng.choice([1, 2, 3]))
            coeffs[d] = c * R(rng.randint(2, 4)) if rng.random() < 0.5 else c
    return DescendingSeries(coeffs, floor)


def _random_series(rng, top, floor):
    coeffs = {d: Fraction(rng.randint(-4, 4), rng.choice([1, 2])) * (R(2) if rng.random() < 0.3 else 1)
              for d in range(floor, top + 1)}
    coeffs[top] = 1
    return DescendingSeries(coeffs, floor)


def criterion_round_trips():
    rng = random.Random(20240601)
    failures = {"inverse": 0, "shift": 0, "flip": 0}
    for _ in range(N_RANDOM):
        f = _random_cov(rng, -rng.randint(3, 7))
        g = compositional_inverse(f)
        z = DescendingSeries.monomial(1, f.floor)
        if not (series_compose(f, g).agrees_with(z) and series_compose(g, f).agrees_with(z)):
            failures["inverse"] += 1
        s = _random_series(rng, rng.randint(-2, 3), -rng.randint(3, 7))
        a = Fraction(rng.randint(-5, 5), rng.choice([1, 2, 3]))
        if taylor_shift(taylor_shift(s, a), -a) != s:
            failures["shift"] += 1
        t = _random_series(rng, -rng.randint(0, 3), -rng.randint(4, 8))
        if flip_variable(flip_variable(t)) != t:
            failures["flip"] += 1
    return not any(failures.values()), f"{N_RANDOM} cases each, failures={failures}"


def criterion_structure():
    bad = {}
    for k in range(1, KMAX + 1):
        problems = structural_problems(k, kerov.kerov_polynomial(k))
        if problems:
            bad[k] = problems
    return not bad, f"k <= {KMAX}, problems={bad}"


def criterion_vanishing():
    bad = []
    for n in range(1, 7):
        for lam in partitions(n):
            for k in range(n + 1, n + 3):
                value = kerov.kerov_polynomial(k).evaluate(free_cumulants(lam, k + 1))
                if value != 0:
                    bad.append((lam.parts, k, value))
    return not bad, f"n <= 6, n < k <= n+2, failures={bad[:3]}"


CRITERIA = [
    ("1 table reproduction (formulas 1,2,3; k<=5)", criterion_table),
    ("2 cross-formula agreement (k<=10)", criterion_agreement),
    ("3 Lagrange-inversion consistency (k<=10)", criterion_recover),
    ("4 Fig. 1 interlacing of (4,3,1)", criterion_fig1),
    ("5 master character identity (n<=8)", criterion_characters),
    ("6 round-trip property suite", criterion_round_trips),
    ("7 structural invariants (k<=10)", criterion_structure),
    ("8 vanishing beyond n (n<=6)", criterion_vanishing),
]


@pytest.mark.parametrize("name,check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, check, acceptance_report):
    ok, detail = check()
    acceptance_report(f"[{'PASS' if ok else 'FAIL'}] criterion {name}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    import sys
    results = []
    for name, check in CRITERIA:
        ok, detail = check()
        results.append(ok)
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {name}: {detail}")
    sys.exit(0 if all(results) else 1)
