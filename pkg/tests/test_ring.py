import pytest
from hypothesis import given, strategies as st

from dcyclic.errors import ContextMismatchError, ParseError
from dcyclic.field import FieldCtx
from dcyclic.ring import (
    RElem,
    parse_standard,
    r_from_standard,
    r_mul,
    r_project,
    r_to_standard,
    render_standard,
    std_mul,
)

import oracles

F7 = FieldCtx(7)


@st.composite
def triples(draw, p):
    return tuple(draw(st.integers(0, p - 1)) for _ in range(3))


def test_basis_change_examples():
    assert r_from_standard(F7, 1, 0, 0).comps == (1, 1, 1)
    assert r_from_standard(F7, 0, 1, 0).comps == (0, 1, 6)
    assert r_from_standard(F7, 4, 2, 6).comps == (4, 5, 1)


def test_idempotents_in_standard_basis():
    assert r_to_standard(RElem(F7, (1, 1, 1))) == (1, 0, 0)
    assert r_to_standard(RElem.idempotent(F7, 1)) == (1, 0, 6)
    assert r_to_standard(RElem.idempotent(F7, 2)) == (0, 4, 4)
    assert r_to_standard(RElem.idempotent(F7, 3)) == (0, 3, 4)


def test_idempotent_products():
    v1, v2, v3 = (RElem.idempotent(F7, i) for i in (1, 2, 3))
    assert (v1 * v2).is_zero() and (v2 * v3).is_zero()
    assert v2 * v2 == v2
    assert v1 + v2 + v3 == RElem.one(F7)
    v = RElem.v(F7)
    assert (v * v).comps == (0, 1, 1)
    assert v * v * v == v


def test_projection_examples():
    a = r_from_standard(F7, 3, 2, 5)
    v1 = RElem.idempotent(F7, 1)
    assert r_project(v1 * a, 1).value == a.comps[0]
    assert r_project(v1 * a, 2).value == 0
    assert r_project(r_from_standard(F7, 5, 1, 2), 3).value == 6


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_units_exhaustive(p):
    ctx = FieldCtx(p)
    for t in oracles.all_r_elements(p):
        r = r_from_standard(ctx, *t)
        has_inverse = any(oracles.std_mul(p, t, u) == (1, 0, 0) for u in oracles.all_r_elements(p))
        assert r.is_unit() == has_inverse


@given(st.sampled_from([3, 5, 7, 11, 13]), st.data())
def test_roundtrip_and_multiplication_against_standard_oracle(p, data):
    ctx = FieldCtx(p)
    x, y = data.draw(triples(p)), data.draw(triples(p))
    rx, ry = r_from_standard(ctx, *x), r_from_standard(ctx, *y)
    assert r_to_standard(rx) == x
    assert r_to_standard(rx * ry) == oracles.std_mul(p, x, y)
    assert r_to_standard(r_mul(rx, ry)) == std_mul(ctx, x, y)
    assert r_to_standard(rx + ry) == oracles.std_add(p, x, y)


def test_text_form():
    r = r_from_standard(F7, 4, 2, 6)
    assert render_standard(r) == "4,2,6"
    assert parse_standard(F7, "4,2,6") == r
    for bad in ["4,2", "a,1,1", "7,0,0", "1,1,1,1"]:
        with pytest.raises(ParseError):
            parse_standard(F7, bad)


def test_context_mismatch():
    with pytest.raises(ContextMismatchError):
        RElem.one(F7) + RElem.one(FieldCtx(5))
