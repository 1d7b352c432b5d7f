"""The modified form of the i-quantum group of sl2.

It splits as a direct sum of two algebras, each identified with Q(v)[t].
Within summand ``s`` there is exactly one canonical basis element of each
t-degree ``n``, labelled ``CBIndex((n + s) % 2, n)``:

* ``(0, d)`` is ``p0(d)`` and lives in summand ``d % 2``;
* ``(1, m)`` is ``p1(m)`` and lives in summand ``(m + 1) % 2``;
* ``(1, 0)`` is the unit of summand 1.

Elements are held in t-coordinates; canonical basis coordinates are
computed on demand by a triangular solve.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .laurent import ONE, ZERO, LaurentPoly, RatFunc, qfact
from .tpoly import TPoly, numerator_product, p0, p1

__all__ = [
    "CBIndex",
    "UidotElement",
    "SummandMismatchError",
    "basis_index",
    "cb_poly",
    "cb_element",
    "expand_cb",
    "from_cb",
    "multiply",
    "multiply_direct_sum",
    "structure_constants",
    "is_positive",
    "structure_table",
    "structure_table_json",
    "structure_table_csv",
]


class SummandMismatchError(ValueError):
    """Raised when elements of different summands are combined."""


@dataclass(frozen=True, order=True)
class CBIndex:
    eps: int
    deg: int

    def __post_init__(self):
        if self.eps not in (0, 1):
            raise ValueError(f"eps must be 0 or 1, got {self.eps}")
        if self.deg < 0:
            raise ValueError(f"deg must be nonnegative, got {self.deg}")

    @property
    def summand(self) -> int:
        return (self.deg + self.eps) % 2

    def __str__(self) -> str:
        return f"({self.eps},{self.deg})"


def basis_index(summand: int, n: int) -> CBIndex:
    """The canonical basis label of t-degree ``n`` in ``summand``."""
    return CBIndex((n + summand) % 2, n)


def cb_poly(idx: CBIndex) -> TPoly:
    if idx.eps == 0:
        return p0(idx.deg)
    if idx.deg == 0:
        return TPoly([1])
    return p1(idx.deg)


@lru_cache(maxsize=None)
def _monic_numerator(n: int, eps: int) -> tuple[LaurentPoly, ...]:
    # cb_poly(idx) == N / [deg]! with N monic and integral of degree deg
    if eps == 0:
        return numerator_product(n)
    if n == 0:
        return (ONE,)
    return (ZERO,) + numerator_product(n - 1)


@dataclass(frozen=True)
class UidotElement:
    summand: int
    poly: TPoly

    def __post_init__(self):
        if self.summand not in (0, 1):
            raise ValueError(f"summand must be 0 or 1, got {self.summand}")

    def _check(self, other: "UidotElement") -> None:
        if not isinstance(other, UidotElement):
            raise TypeError(f"expected UidotElement, got {type(other).__name__}")
        if other.summand != self.summand:
            raise SummandMismatchError(
                f"cannot combine elements of summands {self.summand} and {other.summand}"
            )

    def __add__(self, other: "UidotElement") -> "UidotElement":
        self._check(other)
        return UidotElement(self.summand, self.poly + other.poly)

    def __sub__(self, other: "UidotElement") -> "UidotElement":
        self._check(other)
        return UidotElement(self.summand, self.poly - other.poly)

    def __neg__(self) -> "UidotElement":
        return UidotElement(self.summand, -self.poly)

    def __mul__(self, other):
        if isinstance(other, UidotElement):
            return multiply(self, other)
        return UidotElement(self.summand, self.poly.scale(other))

    def __rmul__(self, other):
        return UidotElement(self.summand, self.poly.scale(other))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def expand_cb(self) -> dict[CBIndex, RatFunc]:
        return expand_cb(self)

    @classmethod
    def unit(cls, summand: int) -> "UidotElement":
        return cls(summand, TPoly([1]))


def cb_element(idx: CBIndex) -> UidotElement:
    return UidotElement(idx.summand, cb_poly(idx))


def expand_cb(x: UidotElement) -> dict[CBIndex, RatFunc]:
    """Canonical basis coordinates of ``x``.

    With ``x.poly = P(t) / D`` and the basis element of degree ``n`` equal to
    ``N_n(t) / [n]!`` (``N_n`` monic), back-substitution from the top degree
    writes ``P = sum a_n N_n`` with integral ``a_n``; the coordinate is then
    ``a_n [n]! / D``.

    >>> expand_cb(UidotElement(0, TPoly([0, 0, 1])))
    {CBIndex(eps=0, deg=2): RatFunc('v + v^-1'), CBIndex(eps=0, deg=0): RatFunc('1')}
    """
    rem = list(x.poly.numerators)
    den = x.poly.denominator
    out: dict[CBIndex, RatFunc] = {}
    for n in range(len(rem) - 1, -1, -1):
        a = rem[n]
        if a.is_zero():
            continue
        idx = basis_index(x.summand, n)
        basis = _monic_numerator(n, idx.eps)
        for i in range(n):
            if not basis[i].is_zero():
                rem[i] = rem[i] - a * basis[i]
        out[idx] = RatFunc(a * qfact(n), den)
    return out


def from_cb(coeffs: Mapping[CBIndex, Union[RatFunc, LaurentPoly, int]], summand: int | None = None) -> UidotElement:
    """Inverse of :func:`expand_cb`."""
    summands = {idx.summand for idx in coeffs}
    if summand is None:
        if len(summands) != 1:
            raise SummandMismatchError(f"cannot infer a single summand from {sorted(summands)}")
        summand = summands.pop()
    elif summands - {summand}:
        raise SummandMismatchError(f"indices outside summand {summand}")
    poly = TPoly()
    for idx, c in coeffs.items():
        poly = poly + cb_poly(idx).scale(c)
    return UidotElement(summand, poly)


def multiply(x: UidotElement, y: UidotElement) -> UidotElement:
    x._check(y)
    return UidotElement(x.summand, x.poly * y.poly)


def multiply_direct_sum(x: UidotElement, y: UidotElement) -> UidotElement:
    """Product in the direct sum: zero across summands."""
    if x.summand != y.summand:
        return UidotElement(x.summand, TPoly())
    return multiply(x, y)


def structure_constants(i: CBIndex, j: CBIndex) -> dict[CBIndex, RatFunc]:
    """Canonical basis expansion of ``b_i * b_j``."""
    prod = multiply(cb_element(i), cb_element(j))
    coeffs = expand_cb(prod)
    stray = [k for k in coeffs if k.summand != prod.summand]
    if stray:
        raise AssertionError(f"expansion of b_{i} b_{j} leaves its summand: {stray}")
    return coeffs


def is_positive(coeffs: Mapping[CBIndex, RatFunc]) -> bool:
    """True iff every coefficient lies in N[v, v^-1]."""
    for c in coeffs.values():
        c = RatFunc.coerce(c)
        if not c.is_laurent() or not c.num.is_nonnegative():
            return False
    return True


def indices_up_to(max_deg: int, summand: int | None = None) -> list[CBIndex]:
    summands = (0, 1) if summand is None else (summand,)
    return [basis_index(s, n) for s in summands for n in range(max_deg + 1)]


def structure_table(max_deg: int) -> list[tuple[CBIndex, CBIndex, CBIndex, RatFunc]]:
    """Rows ``(i, j, k, c)`` for all same-summand pairs with degrees <= max_deg."""
    rows = []
    for s in (0, 1):
        idxs = indices_up_to(max_deg, s)
        for i in idxs:
            for j in idxs:
                for k, c in sorted(structure_constants(i, j).items(), key=lambda kv: kv[0].deg):
                    rows.append((i, j, k, c))
    return rows


def _rows(rows: Iterable[tuple[CBIndex, CBIndex, CBIndex, RatFunc]]):
    return sorted(rows, key=lambda r: (r[0].summand, r[0].deg, r[1].deg, r[2].deg))


def structure_table_json(max_deg: int) -> str:
    data = [
        {
            "i": {"eps": i.eps, "deg": i.deg},
            "j": {"eps": j.eps, "deg": j.deg},
            "k": {"eps": k.eps, "deg": k.deg},
            "coefficient": c.to_json(),
        }
        for i, j, k, c in _rows(structure_table(max_deg))
    ]
    return json.dumps({"max_deg": max_deg, "rows": data}, sort_keys=True)


def structure_table_csv(max_deg: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["eps_i", "deg_i", "eps_j", "deg_j", "eps_k", "deg_k", "coefficient"])
    for i, j, k, c in _rows(structure_table(max_deg)):
        w.writerow([i.eps, i.deg, j.eps, j.deg, k.eps, k.deg, str(c)])
    return buf.getvalue()
