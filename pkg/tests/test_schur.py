import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from icanonical.idot import CBIndex
from icanonical.laurent import RatFunc, qint
from icanonical.schur import (
    CBImage,
    LevelMismatchError,
    SchurElement,
    Verdict,
    cb_image_check,
    cb_list,
    cb_list_json,
    project,
    transfer,
    transfer_to,
)
from icanonical.tpoly import T, TPoly, minpoly, p0, p1

from helpers import tpolys


def test_project_examples():
    assert project(T, 0).rep == TPoly([1])  # t = 1 at level 0
    assert project(T * T, 1).rep == T.scale(qint(2))
    assert project(minpoly(4), 4).is_zero()
    assert project(p0(3), 3).rep == p0(3)


def test_reduced_representative_required():
    with pytest.raises(ValueError):
        SchurElement(1, T * T)
    with pytest.raises(ValueError):
        project(T, -1)


def test_transfer_examples():
    assert transfer(project(p1(2), 3)).rep == T
    assert transfer(project(p0(2), 2)).is_zero()
    assert transfer(project(p1(1), 2)).rep == TPoly([1])
    assert transfer_to(project(p0(4), 4), 0).is_zero()


def test_transfer_rejects_low_levels():
    with pytest.raises(ValueError):
        transfer(project(T, 1))
    with pytest.raises(ValueError):
        transfer_to(project(T, 5), 2)
    with pytest.raises(ValueError):
        transfer_to(project(T, 2), 4)


def test_transfer_on_basis_elements():
    for d in range(41):
        assert transfer(project(p1(d + 1), d + 2)) == project(p0(d), d)
        assert transfer(project(p0(d + 2), d + 2)).is_zero()


def test_level_mismatch():
    with pytest.raises(LevelMismatchError):
        project(T, 2) + project(T, 3)
    with pytest.raises(LevelMismatchError):
        project(T, 2) * project(T, 4)


def test_cb_list_small():
    assert [str(i) for i, _ in cb_list(0)] == ["(0,0)"]
    assert [str(i) for i, _ in cb_list(2)] == ["(0,2)", "(1,1)", "(0,0)"]
    assert [str(i) for i, _ in cb_list(3)] == ["(0,3)", "(1,2)", "(0,1)", "(1,0)"]
    assert cb_list(1)[1][1].rep == TPoly([1])


def test_cb_list_dimension():
    for d in range(51):
        basis = cb_list(d)
        assert len(basis) == d + 1
        assert sorted(elt.rep.degree() for _, elt in basis) == list(range(d + 1))
        assert all(idx.summand == d % 2 for idx, _ in basis)


def test_cb_list_json():
    data = json.loads(cb_list_json(2))
    assert data["level"] == 2
    assert [(b["eps"], b["deg"]) for b in data["basis"]] == [(0, 2), (1, 1), (0, 0)]
    assert TPoly.from_json(data["basis"][1]["poly"]) == T


def test_cb_image_examples():
    assert cb_image_check(CBIndex(1, 2), 1) == CBImage(Verdict.MAPS_TO_CB, CBIndex(0, 1))
    assert cb_image_check(CBIndex(0, 4), 2) == CBImage(Verdict.MAPS_TO_ZERO)
    assert cb_image_check(CBIndex(0, 2), 2) == CBImage(Verdict.MAPS_TO_CB, CBIndex(0, 2))
    res = cb_image_check(CBIndex(0, 1), 2)
    assert res.verdict is Verdict.MAPS_TO_ZERO and not res.applicable


def test_cb_image_no_violation_small():
    for d in range(13):
        for deg in range(d + 11):
            for eps in (0, 1):
                assert cb_image_check(CBIndex(eps, deg), d).verdict is not Verdict.VIOLATION


def test_cb_image_levels():
    # p1(d+1) lands on p0(d); p0(d+2k) vanishes for k >= 1
    for d in range(15):
        assert cb_image_check(CBIndex(1, d + 1), d).image == CBIndex(0, d)
        assert cb_image_check(CBIndex(0, d + 2), d).verdict is Verdict.MAPS_TO_ZERO


def test_tower_coherence():
    for top in range(2, 31):
        x = project(p1(top) + p0(top).scale(qint(3)), top)
        assert transfer_to(x, top % 2) == transfer(transfer_to(x, top % 2 + 2))
        assert transfer(x) == project(x.rep, top - 2)


@given(tpolys(7), tpolys(7), st.integers(2, 8))
@settings(max_examples=30, deadline=None)
def test_transfer_is_ring_map(p, q, d):
    x, y = project(p, d), project(q, d)
    assert transfer(x * y) == transfer(x) * transfer(y)
    assert transfer(x + y) == transfer(x) + transfer(y)
    assert transfer(SchurElement.unit(d)) == SchurElement.unit(d - 2)


@given(tpolys(7), tpolys(7), st.integers(0, 6))
@settings(max_examples=30, deadline=None)
def test_project_is_ring_map(p, q, d):
    assert project(p * q, d) == project(p, d) * project(q, d)
    assert project(p, d).rep.degree() <= d


def test_json_round_trip():
    x = project(p0(5) + T.scale(RatFunc(1, qint(2))), 4)
    assert SchurElement.from_json(json.loads(json.dumps(x.to_json()))) == x


def test_t_satisfies_minpoly():
    for d in range(12):
        td = project(T, d)
        acc = SchurElement(d, TPoly())
        power = SchurElement.unit(d)
        for c in minpoly(d).coeffs:
            acc = acc + power * c
            power = power * td
        assert acc.is_zero()
