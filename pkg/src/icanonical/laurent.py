"""Exact arithmetic in Z[v, v^-1] and its fraction field Q(v).

A :class:`LaurentPoly` is stored as ``v**val * P(v)`` where ``P`` is an
integer polynomial with nonzero constant term.  The dense integer part is a
``flint.fmpz_poly``; quantum factorials reach a few thousand terms with
coefficients of several hundred bits, which rules out pure-Python
convolution.

>>> qint(3)
LaurentPoly('v^2 + 1 + v^-2')
>>> RatFunc(qint(4), qint(2))
RatFunc('v^2 + v^-2')
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Union

from flint import fmpz_poly
from flint.utils.flint_exceptions import DomainError

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "DivisionNotExactError",
    "V",
    "ONE",
    "ZERO",
    "qint",
    "qfact",
    "bar",
    "exact_div",
    "gcd",
    "qstep_identity",
    "mul_qint",
]


class DivisionNotExactError(ArithmeticError):
    """Raised when a Laurent polynomial quotient does not lie in Z[v, v^-1]."""


def _trim(val: int, poly: fmpz_poly) -> tuple[int, fmpz_poly]:
    if poly.is_zero():
        return 0, poly
    shift = 0
    while poly[shift] == 0:
        shift += 1
    if shift:
        poly = poly.right_shift(shift)
    return val + shift, poly


class LaurentPoly:
    """An element of Z[v, v^-1].

    Build from a mapping ``{exponent: coefficient}`` or an integer.

    >>> LaurentPoly({2: 1, 1: 3})
    LaurentPoly('v^2 + 3*v')
    >>> LaurentPoly({2: 1, 1: 3}).bar()
    LaurentPoly('3*v^-1 + v^-2')
    """

    __slots__ = ("_val", "_poly", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], int, None] = None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms}
        terms = {int(e): int(c) for e, c in terms.items() if c != 0}
        if not terms:
            self._set(0, fmpz_poly([]))
            return
        lo = min(terms)
        coeffs = [0] * (max(terms) - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = c
        self._set(lo, fmpz_poly(coeffs))

    def _set(self, val: int, poly: fmpz_poly) -> None:
        self._val = val
        self._poly = poly
        self._hash = None

    @classmethod
    def _from_poly(cls, val: int, poly: fmpz_poly) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._set(*_trim(val, poly))
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        if coeff == 0:
            return cls()
        return cls._from_poly(exponent, fmpz_poly([coeff]))

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """Sparse view: exponent -> nonzero integer coefficient."""
        return {
            self._val + i: int(c)
            for i, c in enumerate(self._poly.coeffs())
            if c != 0
        }

    def is_zero(self) -> bool:
        return self._poly.is_zero()

    def is_one(self) -> bool:
        return self._val == 0 and self._poly.is_one()

    def is_unit(self) -> bool:
        """True for +-v^k, the units of Z[v, v^-1]."""
        return self._poly.degree() == 0 and abs(int(self._poly[0])) == 1

    def valuation(self) -> int:
        if self.is_zero():
            raise ValueError("valuation of zero")
        return self._val

    def degree(self) -> int:
        if self.is_zero():
            raise ValueError("degree of zero")
        return self._val + self._poly.degree()

    def coefficient(self, exponent: int) -> int:
        i = exponent - self._val
        if i < 0 or i > self._poly.degree():
            return 0
        return int(self._poly[i])

    def leading_coefficient(self) -> int:
        return int(self._poly.leading_coefficient()) if not self.is_zero() else 0

    def is_nonnegative(self) -> bool:
        """True iff every coefficient is >= 0, i.e. membership in N[v, v^-1]."""
        return all(c >= 0 for c in self._poly.coeffs())

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def _aligned(self, other: "LaurentPoly") -> tuple[int, fmpz_poly, fmpz_poly]:
        lo = min(self._val, other._val)
        a = self._poly.left_shift(self._val - lo) if self._val > lo else self._poly
        b = other._poly.left_shift(other._val - lo) if other._val > lo else other._poly
        return lo, a, b

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        lo, a, b = self._aligned(other)
        return LaurentPoly._from_poly(lo, a + b)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_poly(self._val, -self._poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._from_poly(self._val + other._val, self._poly * other._poly)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_unit():
                raise DivisionNotExactError(f"{self} is not a unit")
            return LaurentPoly.monomial(n * self._val, int(self._poly[0]) ** (-n))
        return LaurentPoly._from_poly(self._val * n, self._poly**n)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v**k."""
        if self.is_zero():
            return self
        return LaurentPoly._from_poly(self._val + k, self._poly)

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^-1."""
        if self.is_zero():
            return self
        coeffs = self._poly.coeffs()
        coeffs.reverse()
        return LaurentPoly._from_poly(-(self._val + len(coeffs) - 1), fmpz_poly(coeffs))

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._val == other._val and self._poly == other._poly

    def __hash__(self) -> int:
        if self._hash is None:
            if self._val == 0 and self._poly.degree() <= 0:
                self._hash = hash(int(self._poly[0]))
            else:
                self._hash = hash((self._val, tuple(int(c) for c in self._poly.coeffs())))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- display / serialization ------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                mono = str(mag)
            else:
                var = "v" if e == 1 else f"v^{e}"
                mono = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(mono if c > 0 else "-" + mono)
            else:
                parts.append(("+ " if c > 0 else "- ") + mono)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def to_json(self) -> list:
        return [[e, str(c)] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data: Iterable) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data})


V = LaurentPoly.monomial(1)
ONE = LaurentPoly(1)
ZERO = LaurentPoly()


def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor, normalized to valuation 0 and positive leading coefficient."""
    if p.is_zero() and q.is_zero():
        return ZERO
    return LaurentPoly._from_poly(0, p._poly.gcd(q._poly))


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """The Laurent polynomial ``r`` with ``r * q == p``.

    >>> exact_div(LaurentPoly({1: 1, -1: 1}), LaurentPoly({2: 1}))
    LaurentPoly('v^-1 + v^-3')
    """
    if q.is_zero():
        raise ZeroDivisionError("Laurent polynomial division by zero")
    if p.is_zero():
        return ZERO
    # q's polynomial part has nonzero constant term, so v-powers never obstruct.
    try:
        quo = p._poly / q._poly
    except DomainError:
        raise DivisionNotExactError(f"({p}) / ({q}) is not a Laurent polynomial") from None
    return LaurentPoly._from_poly(p._val - q._val, quo)


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


@lru_cache(maxsize=None)
def qint(n: int) -> LaurentPoly:
    """The quantum integer (v^n - v^-n) / (v - v^-1)."""
    if n == 0:
        return ZERO
    if n < 0:
        return -qint(-n)
    # v^{n-1} + v^{n-3} + ... + v^{1-n}
    return LaurentPoly._from_poly(1 - n, fmpz_poly([1 - (i % 2) for i in range(2 * n - 1)]))


@lru_cache(maxsize=None)
def qfact(n: int) -> LaurentPoly:
    """Quantum factorial [n]! = [1][2]...[n]."""
    if n < 0:
        raise ValueError(f"quantum factorial of negative integer {n}")
    if n == 0:
        return ONE
    return qfact(n - 1) * qint(n)


_V2_MINUS_ONE = fmpz_poly([-1, 0, 1])


def mul_qint(x: LaurentPoly, n: int) -> LaurentPoly:
    """``x * qint(n)`` computed as ``(x v^2n - x) / (v^2 - 1)``, linear in the size of x."""
    if n == 0 or x.is_zero():
        return ZERO
    if n < 0:
        return -mul_qint(x, -n)
    poly = (x._poly.left_shift(2 * n) - x._poly) / _V2_MINUS_ONE
    return LaurentPoly._from_poly(x._val + 1 - n, poly)


def qstep_identity(d: int, n: int) -> bool:
    """Check [d-1] - [n](v^n v^(1-d) + v^-n v^(d-1)) == [d-1-2n].

    This is the quantum-integer step used to pass from n to n+1 in the
    product formula for f^(n) e^(n) j_d.
    """
    lhs = qint(d - 1) - qint(n) * (LaurentPoly.monomial(n + 1 - d) + LaurentPoly.monomial(d - 1 - n))
    return lhs == qint(d - 1 - 2 * n)


class RatFunc:
    """A reduced fraction num/den in Q(v).

    The denominator has valuation 0 and positive leading coefficient, and
    ``gcd(num, den)`` is 1; equal elements therefore have identical fields.

    >>> RatFunc(qint(2) * qint(3), qint(2) * V)
    RatFunc('v + v^-1 + v^-3')
    >>> RatFunc(1, qint(2))
    RatFunc('(v)/(v^2 + 1)')
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Union[LaurentPoly, int] = 0, den: Union[LaurentPoly, int] = 1):
        num = num if isinstance(num, LaurentPoly) else LaurentPoly(num)
        den = den if isinstance(den, LaurentPoly) else LaurentPoly(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = num._poly.gcd(den._poly)
        if not g.is_one():
            num = LaurentPoly._from_poly(num._val, num._poly / g)
            den = LaurentPoly._from_poly(den._val, den._poly / g)
        self._store(num, den)

    def _store(self, num: LaurentPoly, den: LaurentPoly) -> None:
        # absorb the v-power and sign of den into num
        num = num.shift(-den._val)
        if den.leading_coefficient() < 0:
            num, den = -num, LaurentPoly._from_poly(0, -den._poly)
        elif den._val:
            den = LaurentPoly._from_poly(0, den._poly)
        self.num, self.den = num, den

    @classmethod
    def _reduced(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        # caller guarantees gcd(num, den) = 1
        obj = cls.__new__(cls)
        if num.is_zero():
            obj.num, obj.den = ZERO, ONE
        else:
            obj._store(num, den)
        return obj

    @staticmethod
    def coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (LaurentPoly, int)):
            return RatFunc._reduced(x if isinstance(x, LaurentPoly) else LaurentPoly(x), ONE)
        raise TypeError(f"cannot interpret {type(x).__name__} as an element of Q(v)")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise DivisionNotExactError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        g = gcd(self.den, other.den)
        if g.is_one():
            return RatFunc._reduced(self.num * other.den + other.num * self.den, self.den * other.den)
        a = exact_div(other.den, g)
        b = exact_div(self.den, g)
        return RatFunc(self.num * a + other.num * b, self.den * a)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._reduced(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc()
        # cross-cancel so no gcd of the full products is needed
        a, b = self.num, self.den
        c, d = other.num, other.den
        g1 = gcd(a, d)
        g2 = gcd(c, b)
        if not g1.is_one():
            a, d = exact_div(a, g1), exact_div(d, g1)
        if not g2.is_one():
            c, b = exact_div(c, g2), exact_div(b, g2)
        return RatFunc._reduced(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(v)")
        return RatFunc._reduced(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def bar(self) -> "RatFunc":
        return RatFunc._reduced(self.num.bar(), self.den.bar())

    def __eq__(self, other) -> bool:
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(self.num) if self.is_laurent() else hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        if self.is_laurent():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc('{self}')"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RatFunc":
        """Accepts the dict form, a bare Laurent array, or an integer."""
        if isinstance(data, dict):
            return cls(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))
        if isinstance(data, (int, str)):
            return cls(int(data))
        return cls(LaurentPoly.from_json(data))
