"""One test per acceptance criterion, each under its wall-clock limit.

Every test prints a PASS/FAIL line; the lines are repeated in the pytest
terminal summary.
"""
import time

import pytest

import acceptance_log
from icanonical.idot import UidotElement, expand_cb
from icanonical.laurent import qint, qstep_identity
from icanonical.oracles import gauss_expand_powers
from icanonical.schur import cb_list
from icanonical.suites import default_jobs, run_suite
from icanonical.tpoly import T, TPoly, bar_t, minpoly, p0, p1


def record(number: int, name: str, ok: bool, elapsed: float, limit: float, detail: str = "") -> None:
    passed = ok and elapsed < limit
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number} {name}: {elapsed:.2f}s (limit {limit:g}s)"
    if detail:
        line += f" {detail}"
    print(line, flush=True)
    acceptance_log.LINES.append(line)
    assert ok, detail or name
    assert elapsed < limit, f"{name} took {elapsed:.2f}s, limit {limit}s"


def test_1_commutation_formula_certified():
    start = time.perf_counter()
    report = run_suite("lemma-a", 12)
    elapsed = time.perf_counter() - start
    ok = report.ok and report.checks == 13
    record(1, "lemma-a n<=12 certified", ok, elapsed, 60, f"checks={report.checks} failures={len(report.failures)}")


def test_2_qstep_identity():
    start = time.perf_counter()
    bad = [(d, n) for d in range(41) for n in range(d + 1) if not qstep_identity(d, n)]
    elapsed = time.perf_counter() - start
    record(2, "qstep identity d<=40", not bad, elapsed, 5, f"violations={bad[:5]}")


def test_3_defining_relation_and_dimension():
    start = time.perf_counter()
    problems = []
    for d in range(51):
        m = minpoly(d)
        roots = [-qint(d - 1 - 2 * i) for i in range(d + 1)]
        factors = TPoly([1])
        for r in roots:
            factors = factors * (T - TPoly([r]))
        if len(set(roots)) != d + 1 or factors != m or m.degree() != d + 1:
            problems.append(("minpoly", d))
        basis = cb_list(d)
        if len(basis) != d + 1 or sorted(e.rep.degree() for _, e in basis) != list(range(d + 1)):
            problems.append(("cb_list", d))
    elapsed = time.perf_counter() - start
    record(3, "d+1 distinct factors and dim cb_list = d+1, d<=50", not problems, elapsed, 10, f"problems={problems[:5]}")


def test_4_isomorphism_images_and_bar():
    start = time.perf_counter()
    ok = p0(1) == T and p1(1) == T
    bad = [d for d in range(51) if bar_t(p0(d)) != p0(d)]
    bad += [-m for m in range(1, 51) if bar_t(p1(m)) != p1(m)]
    elapsed = time.perf_counter() - start
    record(4, "p0(1)=p1(1)=t and bar fixes p0, p1 up to 50", ok and not bad, elapsed, 10, f"bad={bad[:5]}")


def test_5_t_multiplication_structure_constants():
    start = time.perf_counter()
    report = run_suite("remark2", 100, jobs=default_jobs())
    elapsed = time.perf_counter() - start
    record(5, "t*p0, t*p1 expansions d<=100", report.ok and report.checks == 202, elapsed, 30,
           f"checks={report.checks} failures={len(report.failures)}")


def test_6_transfer_congruences():
    start = time.perf_counter()
    report = run_suite("transfer", 60, jobs=default_jobs())
    elapsed = time.perf_counter() - start
    record(6, "p1(d+1)=p0(d), p0(d+2)=0 mod minpoly(d), d<=60", report.ok, elapsed, 30,
           f"checks={report.checks} failures={len(report.failures)}")


def test_7_cb_image():
    start = time.perf_counter()
    report = run_suite("cb-image", 30, jobs=default_jobs())
    elapsed = time.perf_counter() - start
    record(7, "cb images are cb or zero, deg<=d+10, d<=30", report.ok, elapsed, 60,
           f"checks={report.checks} failures={len(report.failures)}")


@pytest.mark.slow
def test_8_positivity():
    start = time.perf_counter()
    report = run_suite("positivity", 30, jobs=default_jobs())
    elapsed = time.perf_counter() - start
    # unordered pairs i <= j in each summand: 2 * 31 * 32 / 2
    record(8, "cb products positive, degrees<=30", report.ok and report.checks == 992, elapsed, 600,
           f"checks={report.checks} failures={len(report.failures)}")


def test_9_oracle_cross_check():
    start = time.perf_counter()
    mismatches = []
    for s in (0, 1):
        ref = gauss_expand_powers(s, 25)
        for n in range(26):
            if expand_cb(UidotElement(s, TPoly([0] * n + [1]))) != ref[n]:
                mismatches.append((s, n))
    elapsed = time.perf_counter() - start
    record(9, "expand_cb equals Gaussian elimination on t^0..t^25", not mismatches, elapsed, 60,
           f"mismatches={mismatches}")
