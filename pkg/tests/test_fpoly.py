import math

import pytest
from hypothesis import given, strategies as st

from dscurves.errors import InputError
from dscurves.fields import field_from_order, make_field
from dscurves.fpoly import (
    FieldPoly,
    RatFunc,
    irreducibles,
    poly_from_str,
    ratfunc_from_str,
)


def _poly(F, data, maxdeg=6):
    co = data.draw(st.lists(st.integers(0, F.q - 1), min_size=0,
                            max_size=maxdeg + 1))
    return FieldPoly(F, co)


def test_parse_and_print_round_trip():
    F = make_field(3, 1)
    for s in ("t^4+2*t+1", "2*t^2+t", "1", "0", "(t+1)^3", "t*(t+2)"):
        p = poly_from_str(F, s)
        assert poly_from_str(F, p.to_str()) == p


def test_parse_rejects_implicit_product():
    F = make_field(3, 1)
    with pytest.raises(InputError):
        poly_from_str(F, "2t+1")


def test_degree_and_zero_conventions():
    F = make_field(2, 1)
    assert FieldPoly(F, ()).degree == -1
    assert FieldPoly(F, (1,)).degree == 0
    assert not FieldPoly(F, (0, 0))
    assert FieldPoly(F, (0, 0)).degree == -1


@given(st.sampled_from([2, 3, 4, 5]), st.data())
def test_euclidean_division(q, data):
    F = field_from_order(q)
    a = _poly(F, data)
    b = _poly(F, data)
    if not b:
        return
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.degree < b.degree


@given(st.sampled_from([2, 3, 5]), st.data())
def test_gcd_divides_both(q, data):
    F = field_from_order(q)
    a = _poly(F, data)
    b = _poly(F, data)
    g = a.gcd(b)
    if not a and not b:
        assert not g
        return
    assert g.is_monic()
    assert not a % g and not b % g


def test_factor_reassembles():
    F = make_field(2, 1)
    p = poly_from_str(F, "(t^2+t+1)^2*(t^3+t+1)*t^2")
    fac = p.factor()
    acc = FieldPoly.one(F)
    for base, e in fac:
        assert base.is_irreducible() and base.is_monic()
        for _ in range(e):
            acc = acc * base
    assert acc == p.monic()


def test_irreducible_counts_match_necklace_formula():
    # sum_{e | d} mu(e) q^(d/e) counts the degree-d monic irreducibles
    def mobius(n):
        out, m = 1, n
        for p in range(2, n + 1):
            if m % p == 0:
                m //= p
                if m % p == 0:
                    return 0
                out = -out
        return out

    for q in (2, 3, 4):
        F = field_from_order(q)
        for d in (1, 2, 3, 4, 5):
            expect = sum(
                mobius(e) * q ** (d // e) for e in range(1, d + 1) if d % e == 0
            ) // d
            assert len(irreducibles(F, d)) == expect


def test_powmod_agrees_with_pow_then_mod():
    F = make_field(3, 1)
    x = poly_from_str(F, "t+2")
    m = poly_from_str(F, "t^4+t+2")
    acc = FieldPoly.one(F)
    for e in range(1, 30):
        acc = (acc * x) % m
        assert x.powmod(e, m) == acc


def test_ddf_degrees_profile():
    F = make_field(2, 1)
    p = poly_from_str(F, "(t^2+t+1)*(t^3+t+1)*(t^3+t^2+1)*(t+1)")
    assert p.ddf_degrees() == {1: 1, 2: 1, 3: 2}


def test_ratfunc_normalization():
    F = make_field(3, 1)
    r = ratfunc_from_str(F, "(t^2+2*t)/(2*t)")
    assert r.is_poly()
    assert str(r) == "2*t+1"
    s = ratfunc_from_str(F, "t/(t^2+t)")
    assert s.den.is_monic() and s.den.degree == 1
    with pytest.raises(ZeroDivisionError):
        RatFunc(poly_from_str(F, "t"), FieldPoly(F, ()))


@given(st.sampled_from([2, 3]), st.data())
def test_ratfunc_field_ops(q, data):
    F = field_from_order(q)
    a, b = _poly(F, data, 3), _poly(F, data, 3)
    c, d = _poly(F, data, 3), _poly(F, data, 3)
    if not b or not d:
        return
    r, s = RatFunc(a, b), RatFunc(c, d)
    assert (r + s) - s == r
    if s:
        assert (r / s) * s == r
    assert r * s == s * r


def test_irreducibles_requires_positive_degree():
    with pytest.raises(InputError):
        irreducibles(make_field(2, 1), 0)
