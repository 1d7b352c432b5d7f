"""Polynomials in one variable t over Q(v).

A :class:`TPoly` keeps its coefficients over a common denominator: a tuple
of integral numerators in Z[v, v^-1] and one Laurent denominator.  The
canonical-basis polynomials all have the shape ``N(t) / [n]!`` with ``N``
monic and integral, so products and reductions by the (monic, integral)
defining polynomials never leave integral arithmetic.  Reduced
:class:`RatFunc` coefficients are available through :attr:`TPoly.coeffs`.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence, Union

from .laurent import ONE, ZERO, LaurentPoly, RatFunc, exact_div, gcd, mul_qint, qfact

__all__ = ["TPoly", "T", "p0", "p1", "minpoly", "mul", "divmod_t", "bar_t", "numerator_product"]

Scalar = Union[RatFunc, LaurentPoly, int]


def _add_lists(a: Sequence[LaurentPoly], b: Sequence[LaurentPoly]) -> list[LaurentPoly]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return out


def _mul_lists(a: Sequence[LaurentPoly], b: Sequence[LaurentPoly]) -> list[LaurentPoly]:
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def _scale_list(a: Sequence[LaurentPoly], c: LaurentPoly) -> list[LaurentPoly]:
    if c.is_unit():
        k, sign = c.valuation(), c.leading_coefficient()
        return [x.shift(k) if sign > 0 else -x.shift(k) for x in a]
    return [x * c for x in a]


class TPoly:
    """An element of Q(v)[t].

    Construct from a sequence of coefficients (``RatFunc``, ``LaurentPoly``
    or ``int``), lowest power of t first.

    >>> TPoly([-1, 0, 1]) * TPoly([1]) == TPoly([-1, 0, 1])
    True
    >>> p0(2)
    TPoly('(-v)/(v^2 + 1) + (v)/(v^2 + 1)*t^2')
    """

    __slots__ = ("_nums", "_den", "_coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        rats = [RatFunc.coerce(c) for c in coeffs]
        den = ONE
        for r in rats:
            if not r.den.is_one() and r.den != den:
                g = gcd(den, r.den)
                den = den * exact_div(r.den, g)
        nums = [r.num * exact_div(den, r.den) if not r.is_zero() else ZERO for r in rats]
        self._init(nums, den)

    def _init(self, nums: list[LaurentPoly], den: LaurentPoly) -> None:
        while nums and nums[-1].is_zero():
            nums.pop()
        if not nums:
            den = ONE
        else:
            shift = den.valuation()
            if shift:
                nums = [n.shift(-shift) for n in nums]
                den = den.shift(-shift)
            if den.leading_coefficient() < 0:
                nums = [-n for n in nums]
                den = -den
            if not den.is_one():
                g = den
                for n in reversed(nums):
                    if n.is_zero():
                        continue
                    g = gcd(g, n)
                    if g.is_one():
                        break
                if not g.is_one():
                    nums = [exact_div(n, g) for n in nums]
                    den = exact_div(den, g)
        self._nums = tuple(nums)
        self._den = den
        self._coeffs = None
        self._hash = None

    @classmethod
    def from_numerators(cls, nums: Iterable[LaurentPoly], den: LaurentPoly = ONE) -> "TPoly":
        """Build ``sum(nums[i] t^i) / den`` without going through RatFunc."""
        if den.is_zero():
            raise ZeroDivisionError("TPoly with zero denominator")
        obj = cls.__new__(cls)
        obj._init(list(nums), den)
        return obj

    @classmethod
    def constant(cls, c: Scalar) -> "TPoly":
        return cls([c])

    # -- inspection --------------------------------------------------------

    @property
    def numerators(self) -> tuple[LaurentPoly, ...]:
        return self._nums

    @property
    def denominator(self) -> LaurentPoly:
        return self._den

    @property
    def coeffs(self) -> tuple[RatFunc, ...]:
        """Reduced coefficients, index = power of t."""
        if self._coeffs is None:
            self._coeffs = tuple(RatFunc(n, self._den) for n in self._nums)
        return self._coeffs

    def degree(self) -> int:
        """Degree in t; -1 for the zero polynomial."""
        return len(self._nums) - 1

    def is_zero(self) -> bool:
        return not self._nums

    def coefficient(self, i: int) -> RatFunc:
        if 0 <= i < len(self._nums):
            return RatFunc(self._nums[i], self._den)
        return RatFunc()

    def leading_coefficient(self) -> RatFunc:
        return self.coefficient(self.degree())

    def is_integral(self) -> bool:
        return self._den.is_one()

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "TPoly":
        if isinstance(other, TPoly):
            return other
        if isinstance(other, (RatFunc, LaurentPoly, int)):
            return TPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self._den == other._den:
            return TPoly.from_numerators(_add_lists(self._nums, other._nums), self._den)
        g = gcd(self._den, other._den)
        a = exact_div(other._den, g)
        b = exact_div(self._den, g)
        nums = _add_lists(_scale_list(self._nums, a), _scale_list(other._nums, b))
        return TPoly.from_numerators(nums, self._den * a)

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly.from_numerators([-n for n in self._nums], self._den)

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
        if isinstance(other, (RatFunc, LaurentPoly, int)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TPoly.from_numerators(_mul_lists(self._nums, other._nums), self._den * other._den)

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c: Scalar) -> "TPoly":
        """Multiply by a scalar in Q(v)."""
        c = RatFunc.coerce(c)
        if c.is_zero() or self.is_zero():
            return TPoly()
        num, den = c.num, self._den
        g = gcd(num, den)
        if not g.is_one():
            num, den = exact_div(num, g), exact_div(den, g)
        return TPoly.from_numerators(_scale_list(self._nums, num), den * c.den)

    def shift_t(self, k: int = 1) -> "TPoly":
        """Multiply by t**k."""
        if self.is_zero():
            return self
        return TPoly.from_numerators([ZERO] * k + list(self._nums), self._den)

    def __divmod__(self, other: "TPoly") -> tuple["TPoly", "TPoly"]:
        return divmod_t(self, other)

    def __mod__(self, other: "TPoly") -> "TPoly":
        return divmod_t(self, other)[1]

    def evaluate(self, x: Scalar) -> RatFunc:
        """Substitute t = x (Horner)."""
        x = RatFunc.coerce(x)
        if x.is_laurent():
            xn = x.num
            acc = ZERO
            for n in reversed(self._nums):
                acc = acc * xn + n
            return RatFunc(acc, self._den)
        acc = RatFunc()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_qint(self, k: int, sign: int = 1) -> RatFunc:
        """Substitute t = sign * [k]; same as ``evaluate`` but linear-time per Horner step."""
        acc = ZERO
        for n in reversed(self._nums):
            acc = mul_qint(acc, k) if sign > 0 else -mul_qint(acc, k)
            acc = acc + n
        return RatFunc(acc, self._den)

    def bar(self) -> "TPoly":
        """Apply v -> v^-1 to every coefficient, fixing t."""
        return TPoly.from_numerators([n.bar() for n in self._nums], self._den.bar())

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # the stored form is canonical: normalized denominator, coprime to the numerator content
        return self._den == other._den and self._nums == other._nums

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = str(c)
            if i and len(c.num.terms) > 1 and c.is_laurent():
                cs = f"({cs})"
            if i == 0:
                parts.append(cs)
            else:
                var = "t" if i == 1 else f"t^{i}"
                parts.append(var if c == 1 else f"{cs}*{var}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TPoly('{self}')"

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable) -> "TPoly":
        return cls([RatFunc.from_json(c) for c in data])


T = TPoly([0, 1])


def mul(p: TPoly, q: TPoly) -> TPoly:
    return p * q


def bar_t(p: TPoly) -> TPoly:
    return p.bar()


def divmod_t(p: TPoly, m: TPoly) -> tuple[TPoly, TPoly]:
    """Euclidean division in Q(v)[t]: ``p == q*m + r`` with ``deg r < deg m``.

    Runs as pseudo-division on the integral numerators; when the leading
    numerator of ``m`` is a unit (always so for the monic defining
    polynomials) no scaling happens at all.
    """
    if m.is_zero():
        raise ZeroDivisionError("division by the zero polynomial in t")
    dm = m.degree()
    if p.degree() < dm:
        return TPoly(), p
    rem = list(p._nums)
    mn = m._nums
    lead = mn[-1]
    unit = lead.is_unit()
    scale = ONE  # rem and quo carry an extra factor `scale`
    quo = [ZERO] * (len(rem) - dm)
    for k in range(len(rem) - 1, dm - 1, -1):
        a = rem[k]
        if a.is_zero():
            continue
        if unit:
            c = exact_div(a, lead)
        else:
            rem = [x * lead for x in rem]
            quo = [x * lead for x in quo]
            scale = scale * lead
            c = a
        quo[k - dm] = quo[k - dm] + c
        for i, y in enumerate(mn):
            if not y.is_zero():
                rem[k - dm + i] = rem[k - dm + i] - c * y
    rem = rem[:dm]
    # p/den_p = (quo/scale) * (M/den_m) / den_p ...
    q = TPoly.from_numerators([x * m._den for x in quo], p._den * scale)
    r = TPoly.from_numerators(rem, p._den * scale)
    return q, r


def _linear_product(shifts: Iterable[int]) -> list[LaurentPoly]:
    """Integral coefficient list of prod (t + [s]) over the given shifts."""
    out = [ONE]
    for s in shifts:
        nxt = [ZERO] * (len(out) + 1)
        for j, x in enumerate(out):
            nxt[j + 1] = nxt[j + 1] + x
            if s:
                nxt[j] = nxt[j] + mul_qint(x, s)
        out = nxt
    return out


@lru_cache(maxsize=None)
def numerator_product(d: int) -> tuple[LaurentPoly, ...]:
    """Coefficients of (t + [d-1])(t + [d-3]) ... (t + [1-d]), a monic polynomial of degree d.

    The factors pair up as (t + [k])(t - [k]) = t^2 - [k]^2, so each level
    is one cheap step up from level d - 2.
    """
    if d < 2:
        return (ONE,) if d == 0 else (ZERO, ONE)
    prev = numerator_product(d - 2)
    k = d - 1
    out = [ZERO, ZERO] + list(prev)
    for j, x in enumerate(prev):
        if not x.is_zero():
            out[j] = out[j] - mul_qint(mul_qint(x, k), k)
    return tuple(out)


@lru_cache(maxsize=None)
def p0(d: int) -> TPoly:
    """(t + [d-1])(t + [d-3]) ... (t + [1-d]) / [d]!"""
    if d < 0:
        raise ValueError(f"p0 needs d >= 0, got {d}")
    return TPoly.from_numerators(numerator_product(d), qfact(d))


@lru_cache(maxsize=None)
def p1(m: int) -> TPoly:
    """t (t + [m-2]) (t + [m-4]) ... (t + [2-m]) / [m]!, of degree m."""
    if m < 1:
        raise ValueError(f"p1 needs m >= 1, got {m}")
    return TPoly.from_numerators((ZERO,) + numerator_product(m - 1), qfact(m))


@lru_cache(maxsize=None)
def minpoly(d: int) -> TPoly:
    """The monic defining polynomial (t + [d-1])(t + [d-3]) ... (t + [-d-1]) of degree d+1."""
    if d < 0:
        raise ValueError(f"minpoly needs d >= 0, got {d}")
    return TPoly.from_numerators(_linear_product(d - 1 - 2 * i for i in range(d + 1)))
