import pytest
from hypothesis import assume, given, strategies as st

from dcyclic.errors import FieldDivisionError, NotInvertibleError, ParseError, UndefinedGcdError
from dcyclic.field import FieldCtx
from dcyclic.poly import (
    NEG_INF,
    Poly,
    divides,
    exact_div,
    mod_xk_minus_1,
    omega,
    parse_poly,
    poly_divmod,
    poly_ext_gcd,
    poly_gcd,
    poly_gcd_many,
    poly_inv_mod,
    poly_mulmod,
    poly_reciprocal,
    render_poly,
    reversal,
    x_pow_mod,
)

F7 = FieldCtx(7)


def P(*coeffs, ctx=F7):
    return Poly(ctx, coeffs)


@st.composite
def polys(draw, p=None, max_deg=8, nonzero=False):
    p = p or draw(st.sampled_from([3, 5, 7]))
    coeffs = draw(st.lists(st.integers(0, p - 1), min_size=0, max_size=max_deg + 1))
    f = Poly(FieldCtx(p), coeffs)
    if nonzero:
        assume(not f.is_zero())
    return f


@st.composite
def poly_pair(draw, max_deg=8):
    p = draw(st.sampled_from([3, 5, 7]))
    return draw(polys(p, max_deg)), draw(polys(p, max_deg, nonzero=True))


def test_representation_is_stripped():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).is_zero() and P().degree == NEG_INF
    assert P(7, 14, 3).coeffs == (0, 0, 3)


def test_division_examples():
    iota = P(1, 1, 1, 1, 1)
    q, r = poly_divmod(Poly.x_pow_minus_1(F7, 5), P(6, 1))
    assert q == iota and r.is_zero()
    q, r = poly_divmod(P(6, 0, 1), P(1, 1))
    assert q == P(6, 1) and r.is_zero()
    a = P(3, 1, 4)
    assert poly_divmod(a, Poly.one(F7)) == (a, Poly.zero(F7))


def test_division_by_zero():
    with pytest.raises(FieldDivisionError):
        poly_divmod(P(1), Poly.zero(F7))


def test_gcd_examples():
    assert poly_gcd(P(6, 0, 1), P(1, 1)) == P(1, 1)
    assert poly_gcd(P(1, 1, 1, 1, 1), P(6, 1)) == P(1)
    assert poly_gcd(P(2, 4), Poly.zero(F7)) == P(4, 1)
    with pytest.raises(UndefinedGcdError):
        poly_gcd(Poly.zero(F7), Poly.zero(F7))


def test_ext_gcd_examples():
    a, b = P(1, 1), P(2, 1)
    g, s, t = poly_ext_gcd(a, b)
    assert g == P(1) and s * a + t * b == g
    g, s, t = poly_ext_gcd(P(3, 2), P(1))
    assert g == P(1) and s * P(3, 2) + t == P(1)
    f = P(2, 0, 3)
    g, s, t = poly_ext_gcd(f, f)
    assert g == f.monic() and s * f + t * f == g


def test_inverse_mod_examples():
    assert poly_inv_mod(P(1), P(1, 0, 1)) == P(1)
    assert poly_inv_mod(P(2), P(1, 1)) == P(4)
    assert poly_inv_mod(P(0, 1), P(1, 0, 1)) == P(0, 6)
    with pytest.raises(NotInvertibleError):
        poly_inv_mod(P(1, 1), P(6, 0, 1))


def test_reciprocal_examples():
    iota = P(1, 1, 1, 1, 1)
    assert poly_reciprocal(iota) == iota
    assert poly_reciprocal(P(6, 1)) == P(6, 1)
    # (4x^3+3x^2+2x+5)* = 5^-1 (5x^3+2x^2+3x+4)
    assert poly_reciprocal(P(5, 2, 3, 4)) == P(4, 3, 2, 5).scale(3)
    assert poly_reciprocal(Poly.zero(F7)).is_zero()
    assert reversal(P(0, 0, 2, 1)) == P(1, 2)


def test_omega_examples():
    assert omega(F7, 1, 5) == P(1)
    assert omega(F7, 2) == P(1, 1)
    assert Poly.x_pow_minus_1(F7, 2) * omega(F7, 3, 2) == Poly.x_pow_minus_1(F7, 6)


def test_mulmod_examples():
    xm1 = Poly.x_pow_minus_1(F7, 5)
    assert poly_mulmod(P(0, 1), Poly.monomial(F7, 4), xm1) == P(1)
    assert poly_mulmod(Poly.monomial(F7, 3), Poly.monomial(F7, 4), xm1) == Poly.monomial(F7, 2)
    assert mod_xk_minus_1(Poly.monomial(F7, 7, 3), 5) == Poly.monomial(F7, 2, 3)
    assert x_pow_mod(12, xm1) == Poly.monomial(F7, 2)


def test_render_and_parse():
    iota = P(1, 1, 1, 1, 1)
    assert render_poly(iota) == "1 1 1 1 1"
    assert render_poly(Poly.zero(F7)) == "0"
    assert parse_poly(F7, "1 1 1 1 1") == iota
    assert parse_poly(F7, "0").is_zero()
    assert P(5, 2, 3, 4).pretty() == "4x^3+3x^2+2x+5"
    for bad in ["", "1 x", "1 7", "-1"]:
        with pytest.raises(ParseError):
            parse_poly(F7, bad, line=3)


@given(poly_pair())
def test_divmod_identity(pair):
    a, b = pair
    q, r = poly_divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(st.data())
def test_gcd_is_bezout_common_divisor(data):
    p = data.draw(st.sampled_from([3, 5, 7]))
    a = data.draw(polys(p, nonzero=True))
    b = data.draw(polys(p))
    g, s, t = poly_ext_gcd(a, b)
    # a monic common divisor lying in the ideal (a, b) is the gcd
    assert g.is_monic()
    assert divides(g, a) and divides(g, b)
    assert s * a + t * b == g
    assert poly_gcd(a, b) == g


@given(st.data())
def test_gcd_of_products(data):
    p = data.draw(st.sampled_from([3, 5, 7]))
    a, b, c = (data.draw(polys(p, 4, nonzero=True)) for _ in range(3))
    g = poly_gcd(a * c, b * c)
    assert divides(c.monic(), g)
    assert poly_gcd_many([a * c, b * c, c]) == c.monic()


@given(st.data())
def test_inverse_mod(data):
    p = data.draw(st.sampled_from([3, 5, 7]))
    m = data.draw(polys(p, 6, nonzero=True))
    assume(m.degree >= 1)
    a = data.draw(polys(p, 6))
    if a.is_zero() or poly_gcd(a, m).degree > 0:
        with pytest.raises(NotInvertibleError):
            poly_inv_mod(a, m)
    else:
        assert poly_mulmod(a, poly_inv_mod(a, m), m) == Poly.one(a.ctx)


@given(st.data())
def test_reciprocal_multiplicative(data):
    p = data.draw(st.sampled_from([3, 5, 7]))
    a, b = data.draw(polys(p)), data.draw(polys(p))
    assert poly_reciprocal(a * b) == poly_reciprocal(a) * poly_reciprocal(b)


@given(polys(nonzero=True))
def test_reciprocal_twice_is_monic_scaling(f):
    assume(f.coeff(0) != 0)
    assert poly_reciprocal(poly_reciprocal(f)) == f.monic()
    assert poly_reciprocal(f).degree == f.degree


@given(st.sampled_from([3, 5, 7]), st.integers(1, 8), st.integers(1, 8))
def test_omega_identity(p, m, n):
    ctx = FieldCtx(p)
    assert Poly.x_pow_minus_1(ctx, m) * omega(ctx, n, m) == Poly.x_pow_minus_1(ctx, m * n)


@given(polys(), st.integers(1, 9))
def test_mod_xk_minus_1_folds_exponents(f, k):
    folded = [0] * k
    for i, c in enumerate(f.coeffs):
        folded[i % k] += c
    assert mod_xk_minus_1(f, k) == Poly(f.ctx, folded)


def test_exact_div_raises_on_remainder():
    with pytest.raises(ValueError):
        exact_div(P(1, 0, 1), P(1, 1))


def test_evaluation_and_arith():
    f = P(1, 1, 1, 1, 1)
    assert f(1) == 5
    assert (f - f).is_zero()
    assert (f * 0).is_zero()
    assert f ** 0 == P(1)
    assert P(1, 1) ** 7 == P(1, 0, 0, 0, 0, 0, 0, 1)
