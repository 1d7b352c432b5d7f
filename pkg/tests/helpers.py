"""Shared helpers: a sympy bridge used as an independent oracle, and hypothesis strategies."""
from __future__ import annotations

import sympy
from hypothesis import strategies as st

from icanonical.laurent import LaurentPoly, RatFunc
from icanonical.tpoly import TPoly

v = sympy.Symbol("v")
t = sympy.Symbol("t")


def sym_qint(n: int):
    return sympy.cancel((v**n - v**-n) / (v - 1 / v))


def sym_qfact(n: int):
    out = sympy.Integer(1)
    for i in range(1, n + 1):
        out *= sym_qint(i)
    return sympy.cancel(out)


def laurent_from_sympy(expr) -> LaurentPoly:
    shift = 4096
    poly = sympy.Poly(sympy.expand(expr * v**shift), v)
    return LaurentPoly({int(m[0]) - shift: int(c) for m, c in poly.terms()})


def ratfunc_from_sympy(expr) -> RatFunc:
    num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
    return RatFunc(laurent_from_sympy(num), laurent_from_sympy(den))


def tpoly_from_sympy(expr) -> TPoly:
    poly = sympy.Poly(sympy.expand(expr), t)
    coeffs = list(reversed(poly.all_coeffs()))
    return TPoly([ratfunc_from_sympy(c) for c in coeffs])


def laurent_to_sympy(p: LaurentPoly):
    return sum((c * v**e for e, c in p.terms.items()), sympy.Integer(0))


laurent_polys = st.dictionaries(
    st.integers(min_value=-8, max_value=8), st.integers(min_value=-20, max_value=20), max_size=6
).map(LaurentPoly)

nonzero_laurent_polys = laurent_polys.filter(lambda p: not p.is_zero())

ratfuncs = st.tuples(laurent_polys, nonzero_laurent_polys).map(lambda nd: RatFunc(*nd))

small_ratfuncs = st.tuples(
    st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), max_size=3).map(LaurentPoly),
    st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), min_size=1, max_size=2)
    .map(LaurentPoly)
    .filter(lambda p: not p.is_zero()),
).map(lambda nd: RatFunc(*nd))


def tpolys(max_deg: int = 5, coeffs=small_ratfuncs):
    return st.lists(coeffs, max_size=max_deg + 1).map(TPoly)
