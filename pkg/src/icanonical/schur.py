"""Finite quotients Q(v)[t] / (m_d(t)) and the transfer maps between them.

The level-d algebra has dimension d + 1; the class of t plays the role of
the generator t_d and the class of 1 is the idempotent j_d.  The transfer
from level d+2 to level d is reduction modulo ``minpoly(d)``, which is
well defined because ``minpoly(d)`` divides ``minpoly(d + 2)``.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .idot import CBIndex, cb_poly
from .tpoly import TPoly, divmod_t, minpoly

__all__ = [
    "SchurElement",
    "LevelMismatchError",
    "Verdict",
    "CBImage",
    "project",
    "transfer",
    "transfer_to",
    "cb_list",
    "cb_list_json",
    "cb_image_check",
]


class LevelMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class SchurElement:
    level: int
    rep: TPoly

    def __post_init__(self):
        if self.level < 0:
            raise ValueError(f"level must be nonnegative, got {self.level}")
        if self.rep.degree() > self.level:
            raise ValueError(f"representative of degree {self.rep.degree()} is not reduced at level {self.level}")

    def _check(self, other: "SchurElement") -> None:
        if other.level != self.level:
            raise LevelMismatchError(f"levels {self.level} and {other.level} differ")

    def __add__(self, other: "SchurElement") -> "SchurElement":
        self._check(other)
        return SchurElement(self.level, self.rep + other.rep)

    def __sub__(self, other: "SchurElement") -> "SchurElement":
        self._check(other)
        return SchurElement(self.level, self.rep - other.rep)

    def __neg__(self) -> "SchurElement":
        return SchurElement(self.level, -self.rep)

    def __mul__(self, other):
        if isinstance(other, SchurElement):
            self._check(other)
            return project(self.rep * other.rep, self.level)
        return SchurElement(self.level, self.rep.scale(other))

    def __rmul__(self, other):
        return SchurElement(self.level, self.rep.scale(other))

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def to_json(self) -> dict:
        return {"level": self.level, "rep": self.rep.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "SchurElement":
        return cls(int(data["level"]), TPoly.from_json(data["rep"]))

    @classmethod
    def unit(cls, level: int) -> "SchurElement":
        return project(TPoly([1]), level)


def project(p: TPoly, d: int) -> SchurElement:
    """The class of ``p`` at level ``d`` (t -> t_d)."""
    if d < 0:
        raise ValueError(f"level must be nonnegative, got {d}")
    return SchurElement(d, divmod_t(p, minpoly(d))[1])


@lru_cache(maxsize=None)
def _tower_divides(d: int) -> bool:
    return divmod_t(minpoly(d + 2), minpoly(d))[1].is_zero()


def transfer(x: SchurElement) -> SchurElement:
    """Level d+2 -> level d."""
    if x.level < 2:
        raise ValueError(f"transfer needs level >= 2, got {x.level}")
    d = x.level - 2
    if not _tower_divides(d):
        raise ArithmeticError(f"minpoly({d}) does not divide minpoly({d + 2})")
    return project(x.rep, d)


def transfer_to(x: SchurElement, level: int) -> SchurElement:
    """Composite of transfers down to ``level`` (same parity, not above ``x.level``)."""
    gap = x.level - level
    if level < 0 or gap < 0 or gap % 2:
        raise ValueError(f"cannot transfer from level {x.level} to level {level}")
    while x.level > level:
        x = transfer(x)
    return x


def _cb_labels(d: int) -> list[CBIndex]:
    labels = []
    for i in range(d // 2 + 1):
        labels.append(CBIndex(0, d - 2 * i))
        m = d - 2 * i - 1
        if m >= 0:
            labels.append(CBIndex(1, m))
    return labels


@lru_cache(maxsize=None)
def _cb_list(d: int) -> tuple[tuple[CBIndex, SchurElement], ...]:
    return tuple((idx, project(cb_poly(idx), d)) for idx in _cb_labels(d))


def cb_list(d: int) -> list[tuple[CBIndex, SchurElement]]:
    """Canonical basis of the level-d algebra, highest degree first.

    >>> [str(idx) for idx, _ in cb_list(3)]
    ['(0,3)', '(1,2)', '(0,1)', '(1,0)']
    """
    if d < 0:
        raise ValueError(f"level must be nonnegative, got {d}")
    return list(_cb_list(d))


def cb_list_json(d: int) -> str:
    basis = [
        {"eps": idx.eps, "deg": idx.deg, "poly": elt.rep.to_json()}
        for idx, elt in cb_list(d)
    ]
    return json.dumps({"level": d, "basis": basis}, sort_keys=True)


class Verdict(enum.Enum):
    MAPS_TO_CB = "maps-to-cb"
    MAPS_TO_ZERO = "maps-to-zero"
    VIOLATION = "violation"


@dataclass(frozen=True)
class CBImage:
    verdict: Verdict
    image: Optional[CBIndex] = None
    applicable: bool = True


def cb_image_check(idx: CBIndex, d: int) -> CBImage:
    """Check that the canonical basis element ``idx`` lands on a basis element or zero at level ``d``.

    Level ``d`` only receives the summand of parity ``d % 2``; other
    indices are reported as zero with ``applicable=False``.
    """
    if idx.summand != d % 2:
        return CBImage(Verdict.MAPS_TO_ZERO, None, applicable=False)
    img = project(cb_poly(idx), d)
    if img.is_zero():
        return CBImage(Verdict.MAPS_TO_ZERO)
    for label, elt in _cb_list(d):
        if elt.rep.degree() == img.rep.degree() and elt == img:
            return CBImage(Verdict.MAPS_TO_CB, label)
    return CBImage(Verdict.VIOLATION)
