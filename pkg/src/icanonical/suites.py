"""Verification suites run by the command line.

A suite is split into independent units (one per level ``d`` or per ``n``);
each unit returns how many checks it ran and the failures it saw.  Units
are plain module-level functions so they can be shipped to worker
processes.
"""
from __future__ import annotations

import os
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Optional

from .idot import CBIndex, basis_index, expand_cb, is_positive, structure_constants, UidotElement
from .laurent import qint, qstep_identity
from .oracles import gauss_expand_powers
from .schur import Verdict, cb_image_check, cb_list, project, transfer
from .tpoly import T, TPoly, divmod_t, minpoly, numerator_product, p0, p1
from .ujrewrite import Certificate, RewriteStep, verify_lemma_a

__all__ = ["SUITES", "DEFAULT_BOUNDS", "SuiteReport", "run_suite", "default_jobs"]

JOBS_ENV = "ICANONICAL_JOBS"
# Horner evaluation at every root grows like d^5 in bit operations
ROOT_EVAL_MAX_D = 30

# (check-id, inputs, expected, actual)
Failure = dict
UnitResult = tuple[int, list[Failure]]


@dataclass
class SuiteReport:
    suite: str
    params: dict
    checks: int = 0
    failures: list = field(default_factory=list)
    wall_time: Optional[float] = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return asdict(self)


def _fail(check_id: str, inputs: Any, expected: Any, actual: Any) -> Failure:
    return {"check_id": check_id, "inputs": inputs, "expected": str(expected), "actual": str(actual)}


def _natural_key(s: str):
    return [int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", s)]


# -- units -------------------------------------------------------------------


def lemma_a_unit(n: int, log_rewrites: bool = False) -> tuple[int, list[Failure], list[str]]:
    steps: list[RewriteStep] = []
    verdict, nf = verify_lemma_a(n, log=steps.append if log_rewrites else None)
    lines = [s.to_json() for s in steps]
    if verdict is Certificate.CERTIFIED:
        return 1, [], lines
    return 1, [_fail(f"lemma-a/n={n}", {"n": n}, "0", nf)], lines


def qstep_unit(d: int) -> UnitResult:
    fails = [
        _fail(f"qstep/d={d}/n={n}", {"d": d, "n": n}, True, False)
        for n in range(d + 1)
        if not qstep_identity(d, n)
    ]
    return d + 1, fails


def remark2_unit(d: int) -> UnitResult:
    fails = []
    lhs = T * p0(d)
    rhs = p1(d + 1).scale(qint(d + 1))
    if lhs != rhs:
        fails.append(_fail(f"remark2/d={d}/line=1", {"d": d}, rhs, lhs))
    lhs = T * p1(d + 1)
    rhs = p0(d + 2).scale(qint(d + 2)) + p0(d).scale(qint(d + 1))
    if lhs != rhs:
        fails.append(_fail(f"remark2/d={d}/line=2", {"d": d}, rhs, lhs))
    return 2, fails


def transfer_unit(d: int) -> UnitResult:
    fails = []
    m = minpoly(d)
    r = divmod_t(p1(d + 1), m)[1]
    if r != p0(d):
        fails.append(_fail(f"transfer/d={d}/p1-to-p0", {"d": d}, p0(d), r))
    r = divmod_t(p0(d + 2), m)[1]
    if not r.is_zero():
        fails.append(_fail(f"transfer/d={d}/p0-vanishes", {"d": d}, 0, r))
    img = transfer(project(p1(d + 1), d + 2))
    if img != project(p0(d), d):
        fails.append(_fail(f"transfer/d={d}/map", {"d": d}, p0(d), img.rep))
    return 3, fails


def positivity_unit(summand: int, i: int, max_d: int) -> UnitResult:
    # products commute, so pairs j >= i cover every product
    fails = []
    a = basis_index(summand, i)
    for j in range(i, max_d + 1):
        b = basis_index(summand, j)
        coeffs = structure_constants(a, b)
        if not is_positive(coeffs):
            bad = {str(k): str(c) for k, c in coeffs.items()}
            fails.append(_fail(f"positivity/s={summand}/i={i}/j={j}", {"i": str(a), "j": str(b)}, "N[v,v^-1]", bad))
    return max_d + 1 - i, fails


def cb_image_unit(d: int) -> UnitResult:
    fails = []
    count = 0
    for deg in range(d + 11):
        for eps in (0, 1):
            idx = CBIndex(eps, deg)
            count += 1
            res = cb_image_check(idx, d)
            if res.verdict is Verdict.VIOLATION:
                fails.append(_fail(f"cb-image/d={d}/idx={idx}", {"d": d, "idx": str(idx)}, "cb or 0", "violation"))
    return count, fails


def basis_unit(d: int) -> UnitResult:
    fails = []
    m = minpoly(d)
    roots = [-qint(d - 1 - 2 * i) for i in range(d + 1)]
    if m.degree() != d + 1 or not m.leading_coefficient() == 1:
        fails.append(_fail(f"basis/d={d}/monic", {"d": d}, f"monic of degree {d + 1}", m))
    if len(set(roots)) != d + 1:
        fails.append(_fail(f"basis/d={d}/distinct-roots", {"d": d}, d + 1, len(set(roots))))
    # m_d = N_d(t) * (t - [d+1]) with N_d the numerator of p0(d), built by a separate recursion
    factored = TPoly.from_numerators(numerator_product(d)) * TPoly([-qint(d + 1), 1])
    if factored != m:
        fails.append(_fail(f"basis/d={d}/factored", {"d": d}, factored, m))
    if d <= ROOT_EVAL_MAX_D:
        bad = [d - 1 - 2 * i for i in range(d + 1) if not m.evaluate_qint(d - 1 - 2 * i, -1).is_zero()]
        if bad:
            fails.append(_fail(f"basis/d={d}/roots", {"d": d}, "all vanish", bad))
    degs = sorted(elt.rep.degree() for _, elt in cb_list(d))
    if degs != list(range(d + 1)):
        fails.append(_fail(f"basis/d={d}/cb-degrees", {"d": d}, list(range(d + 1)), degs))
    if not divmod_t(minpoly(d + 2), m)[1].is_zero():
        fails.append(_fail(f"basis/d={d}/tower", {"d": d}, 0, "nonzero remainder"))
    return 6, fails


def oracle_unit(summand: int, max_power: int) -> UnitResult:
    fails = []
    expected = gauss_expand_powers(summand, max_power)
    for n in range(max_power + 1):
        got = expand_cb(UidotElement(summand, TPoly([0] * n + [1])))
        if got != expected[n]:
            fails.append(_fail(f"oracle/s={summand}/n={n}", {"summand": summand, "n": n}, expected[n], got))
    return max_power + 1, fails


def bar_unit(d: int) -> UnitResult:
    fails = []
    for name, p in (("p0", p0(d)), ("p1", p1(d + 1)), ("minpoly", minpoly(d))):
        if p.bar() != p:
            fails.append(_fail(f"bar/d={d}/{name}", {"d": d}, p, p.bar()))
    for n in (d, -d):
        q = qint(n)
        if q.bar() != q:
            fails.append(_fail(f"bar/n={n}/qint", {"n": n}, q, q.bar()))
    return 5, fails


# -- suite table -------------------------------------------------------------


def _lemma_units(bound: int):
    return [(lemma_a_unit, (n,)) for n in range(bound + 1)]


def _per_d(fn: Callable) -> Callable:
    return lambda bound: [(fn, (d,)) for d in range(bound + 1)]


def _positivity_units(bound: int):
    return [(positivity_unit, (s, i, bound)) for s in (0, 1) for i in range(bound + 1)]


def _basis_units(bound: int):
    units = [(basis_unit, (d,)) for d in range(bound + 1)]
    top = min(bound, 25)
    units += [(oracle_unit, (s, top)) for s in (0, 1)]
    return units


SUITES: dict[str, Callable[[int], list]] = {
    "lemma-a": _lemma_units,
    "qstep": _per_d(qstep_unit),
    "remark2": _per_d(remark2_unit),
    "transfer": _per_d(transfer_unit),
    "positivity": _positivity_units,
    "cb-image": _per_d(cb_image_unit),
    "basis": _basis_units,
    "bar": _per_d(bar_unit),
}

DEFAULT_BOUNDS = {
    "lemma-a": 12,
    "qstep": 40,
    "remark2": 100,
    "transfer": 60,
    "positivity": 30,
    "cb-image": 30,
    "basis": 60,
    "bar": 50,
}


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _call(unit):
    fn, args = unit
    return fn(*args)


def run_suite(
    name: str,
    bound: Optional[int] = None,
    *,
    jobs: int = 1,
    log_rewrites: bool = False,
    rewrite_log: Optional[Callable[[str], None]] = None,
    timing: bool = True,
) -> SuiteReport:
    """Run one suite up to ``bound`` (``max_n`` for lemma-a, ``max_d`` otherwise)."""
    if name not in SUITES:
        raise KeyError(name)
    if bound is None:
        bound = DEFAULT_BOUNDS[name]
    start = time.perf_counter()
    units = SUITES[name](bound)
    if name == "lemma-a":
        units = [(lemma_a_unit, (n, log_rewrites)) for (_, (n,)) in units]
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_call, units))
    else:
        results = [_call(u) for u in units]
    report = SuiteReport(name, {"max_n" if name == "lemma-a" else "max_d": bound})
    for res in results:
        count, fails = res[0], res[1]
        if len(res) > 2 and rewrite_log is not None:
            for line in res[2]:
                rewrite_log(line)
        report.checks += count
        report.failures.extend(fails)
    report.failures.sort(key=lambda f: _natural_key(f["check_id"]))
    if timing:
        report.wall_time = round(time.perf_counter() - start, 3)
    return report
