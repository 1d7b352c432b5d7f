"""Exact computations with the i-canonical basis of the modified i-quantum group of sl2."""

from .laurent import (
    DivisionNotExactError,
    LaurentPoly,
    RatFunc,
    bar,
    exact_div,
    qfact,
    qint,
    qstep_identity,
)
from .tpoly import TPoly, bar_t, divmod_t, minpoly, p0, p1
from .idot import (
    CBIndex,
    SummandMismatchError,
    UidotElement,
    cb_poly,
    expand_cb,
    from_cb,
    is_positive,
    multiply,
    multiply_direct_sum,
    structure_constants,
)
from .schur import SchurElement, Verdict, cb_image_check, cb_list, project, transfer
from .ujrewrite import NCPoly, Certificate, divided_power, reduce, rule_set, verify_lemma_a

__all__ = [
    "DivisionNotExactError", "LaurentPoly", "RatFunc", "bar", "exact_div", "qfact", "qint", "qstep_identity",
    "TPoly", "bar_t", "divmod_t", "minpoly", "p0", "p1",
    "CBIndex", "SummandMismatchError", "UidotElement", "cb_poly", "expand_cb", "from_cb", "is_positive",
    "multiply", "multiply_direct_sum", "structure_constants",
    "SchurElement", "Verdict", "cb_image_check", "cb_list", "project", "transfer",
    "NCPoly", "Certificate", "divided_power", "reduce", "rule_set", "verify_lemma_a",
]

__version__ = "0.1.0"
