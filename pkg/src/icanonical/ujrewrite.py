"""The algebra U^j(sl3) as a free algebra on e, f, k, K (K = k^-1) modulo rewriting.

Rules are oriented relations ``lhs -> rhs``; every rhs word is strictly
smaller than lhs in a monomial order (see :func:`order_key`), so reduction
terminates.  A reduction to zero proves an identity: each step replaces a
subword by an equal element.  The system is not known to be confluent, so
a nonzero normal form proves nothing.
"""
from __future__ import annotations

import enum
import heapq
import json
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Optional, Union

from .laurent import V, LaurentPoly, RatFunc, qfact, qint

__all__ = [
    "ALPHABET",
    "NCPoly",
    "RewriteRule",
    "RewriteStep",
    "StepBudgetExceeded",
    "Certificate",
    "order_key",
    "rule_set",
    "reduce",
    "replay",
    "divided_power",
    "lemma_a_difference",
    "verify_lemma_a",
    "E",
    "F",
    "K",
    "KINV",
]

ALPHABET = "efkK"
DEFAULT_STEP_BUDGET = 10**6

Scalar = Union[RatFunc, LaurentPoly, int]


class StepBudgetExceeded(RuntimeError):
    pass


def order_key(word: str) -> tuple:
    """Sort key of the monomial order; larger key means larger word.

    Compares, in turn: the e/f-subword (shorter first, then lexicographic
    with e < f), the number of pairs (k or K) standing left of an e or f,
    and the total number of k/K letters.  Each component is preserved or
    respected by concatenation, so the order is compatible with
    multiplication on both sides.
    """
    ef = []
    inversions = 0
    ks = 0
    for ch in word:
        if ch in "ef":
            ef.append(0 if ch == "e" else 1)
            inversions += ks
        else:
            ks += 1
    return (len(ef), tuple(ef), inversions, ks)


class NCPoly:
    """A finite Q(v)-linear combination of words in e, f, k, K.

    >>> x = NCPoly.word("fe") - NCPoly.word("ef", V)
    >>> print(x)
    fe - (v)*ef
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[str, Scalar]] = None):
        out = {}
        for w, c in (terms or {}).items():
            if any(ch not in ALPHABET for ch in w):
                raise ValueError(f"word {w!r} uses letters outside {ALPHABET!r}")
            c = RatFunc.coerce(c)
            if not c.is_zero():
                out[w] = c
        self._terms = out

    @classmethod
    def _raw(cls, terms: dict[str, RatFunc]) -> "NCPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def word(cls, w: str, coeff: Scalar = 1) -> "NCPoly":
        return cls({w: coeff})

    @property
    def terms(self) -> dict[str, RatFunc]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[str, RatFunc]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    @staticmethod
    def _coerce(other) -> "NCPoly":
        if isinstance(other, NCPoly):
            return other
        if isinstance(other, (RatFunc, LaurentPoly, int)):
            return NCPoly({"": other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return NCPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly._raw({w: -c for w, c in self._terms.items()})

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
            c = RatFunc.coerce(other)
            if c.is_zero():
                return NCPoly()
            return NCPoly._raw({w: a * c for w, a in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = NCPoly()
        for w1, c1 in self._terms.items():
            out = out + NCPoly._raw({w1 + w2: c1 * c2 for w2, c2 in other._terms.items()})
        return out

    def __rmul__(self, other):
        if isinstance(other, (RatFunc, LaurentPoly, int)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "NCPoly":
        out = NCPoly.word("")
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w in sorted(self._terms, key=order_key, reverse=True):
            c = self._terms[w]
            mono = w or "1"
            neg = c.num.leading_coefficient() < 0
            if neg:
                c = -c
            s = mono if c == 1 else f"({c})*{mono}"
            if not parts:
                parts.append("-" + s if neg else s)
            else:
                parts.append(("- " if neg else "+ ") + s)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"NCPoly('{self}')"

    def to_json(self) -> list:
        return [[w, self._terms[w].to_json()] for w in sorted(self._terms, key=order_key)]


E = NCPoly.word("e")
F = NCPoly.word("f")
K = NCPoly.word("k")
KINV = NCPoly.word("K")


@dataclass(frozen=True)
class RewriteRule:
    name: str
    lhs: str
    rhs: NCPoly

    def __post_init__(self):
        top = order_key(self.lhs)
        for w, _ in self.rhs.items():
            if not order_key(w) < top:
                raise ValueError(f"rule {self.name}: {w!r} is not smaller than {self.lhs!r}")


def _rules() -> tuple[RewriteRule, ...]:
    v = LaurentPoly.monomial
    q2 = qint(2)
    return (
        RewriteRule("kK", "kK", NCPoly.word("")),
        RewriteRule("Kk", "Kk", NCPoly.word("")),
        RewriteRule("ke", "ke", NCPoly.word("ek", v(3))),
        RewriteRule("kf", "kf", NCPoly.word("fk", v(-3))),
        RewriteRule("Ke", "Ke", NCPoly.word("eK", v(-3))),
        RewriteRule("Kf", "Kf", NCPoly.word("fK", v(3))),
        RewriteRule(
            "serre-e",
            "fee",
            NCPoly({"efe": q2, "eef": -1, "ek": -q2 * v(1), "eK": -q2 * v(-1)}),
        ),
        RewriteRule(
            "serre-f",
            "ffe",
            NCPoly({"fef": q2, "eff": -1, "kf": -q2 * v(1), "Kf": -q2 * v(-1)}),
        ),
    )


_RULES = _rules()


def rule_set() -> tuple[RewriteRule, ...]:
    return _RULES


@dataclass(frozen=True)
class RewriteStep:
    step: int
    rule: str
    position: int
    before: str
    after: tuple[tuple[str, RatFunc], ...]

    def to_json(self) -> str:
        return json.dumps(
            {
                "step": self.step,
                "rule": self.rule,
                "position": self.position,
                "before": self.before,
                "after": [[w, c.to_json()] for w, c in self.after],
            },
            sort_keys=True,
        )


def _find_redex(word: str, rules: tuple[RewriteRule, ...]) -> Optional[tuple[int, RewriteRule]]:
    for pos in range(len(word)):
        for rule in rules:
            if word.startswith(rule.lhs, pos):
                return pos, rule
    return None


def reduce(
    x: NCPoly,
    *,
    budget: int = DEFAULT_STEP_BUDGET,
    log: Optional[Callable[[RewriteStep], None]] = None,
    rules: Optional[tuple[RewriteRule, ...]] = None,
) -> NCPoly:
    """Normal form of ``x``.

    Words are processed largest first in the monomial order.  Since a
    rewrite only produces smaller words, every contribution to a word is
    collected before that word is rewritten, and cancellations happen as
    early as possible.  Inside a word the leftmost redex is used, and at a
    given position the first rule in rule order.

    >>> print(reduce(NCPoly.word("ke")))
    (v^3)*ek
    """
    rules = _RULES if rules is None else rules
    work: dict[str, RatFunc] = dict(x.items())
    heap = [(_neg_key(w), w) for w in work]
    heapq.heapify(heap)
    done: dict[str, RatFunc] = {}
    steps = 0
    while heap:
        _, w = heapq.heappop(heap)
        c = work.pop(w, None)
        if c is None or c.is_zero():
            continue
        redex = _find_redex(w, rules)
        if redex is None:
            done[w] = c
            continue
        steps += 1
        if steps > budget:
            raise StepBudgetExceeded(f"reduction exceeded {budget} steps")
        pos, rule = redex
        prefix, suffix = w[:pos], w[pos + len(rule.lhs):]
        after = []
        for rw, rc in rule.rhs.items():
            nw = prefix + rw + suffix
            after.append((nw, rc))
            prev = work.get(nw)
            if prev is None:
                work[nw] = c * rc
                heapq.heappush(heap, (_neg_key(nw), nw))
            else:
                work[nw] = prev + c * rc
        if log is not None:
            log(RewriteStep(steps, rule.name, pos, w, tuple(after)))
    return NCPoly._raw(done)


def _neg_key(w: str) -> tuple:
    # heapq is a min-heap; invert the order key
    n, ef, inv, ks = order_key(w)
    return (-n, tuple(-x for x in ef), -inv, -ks)


def replay(steps: Iterable[RewriteStep], rules: Optional[tuple[RewriteRule, ...]] = None) -> bool:
    """Audit a reduction log: each step must be a literal instance of its rule."""
    by_name = {r.name: r for r in (_RULES if rules is None else rules)}
    for s in steps:
        rule = by_name.get(s.rule)
        if rule is None or not s.before.startswith(rule.lhs, s.position):
            return False
        prefix, suffix = s.before[: s.position], s.before[s.position + len(rule.lhs):]
        expected = tuple((prefix + w + suffix, c) for w, c in rule.rhs.items())
        if expected != s.after:
            return False
    return True


def divided_power(g: str, n: int) -> NCPoly:
    """g^n / [n]! for g in {"e", "f"}."""
    if g not in ("e", "f"):
        raise ValueError(f"divided powers are defined for e and f, not {g!r}")
    if n < 0:
        raise ValueError(f"divided power exponent must be nonnegative, got {n}")
    return NCPoly.word(g * n, RatFunc(1, qfact(n)))


def lemma_a_difference(n: int) -> NCPoly:
    """f e^(n+1) - e^(n) (fe - v ef - [n](v^n k + v^-n K)) - v^(n+1) e^(n+1) f."""
    v = LaurentPoly.monomial
    lhs = F * divided_power("e", n + 1)
    middle = F * E - E * F * v(1) - (K * v(n) + KINV * v(-n)) * qint(n)
    rhs = divided_power("e", n) * middle + divided_power("e", n + 1) * F * v(n + 1)
    return lhs - rhs


class Certificate(enum.Enum):
    CERTIFIED = "certified"
    INCONCLUSIVE = "inconclusive"


def verify_lemma_a(
    n: int,
    *,
    budget: int = DEFAULT_STEP_BUDGET,
    log: Optional[Callable[[RewriteStep], None]] = None,
) -> tuple[Certificate, NCPoly]:
    """Reduce the difference of both sides of the commutation formula for ``f e^(n+1)``.

    Returns the verdict together with the normal form (zero when certified).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    nf = reduce(lemma_a_difference(n), budget=budget, log=log)
    return (Certificate.CERTIFIED if nf.is_zero() else Certificate.INCONCLUSIVE), nf
