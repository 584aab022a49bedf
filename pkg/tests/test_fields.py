import pytest
from hypothesis import given, strategies as st

from dscurves.errors import InputError
from dscurves.fields import extension_field, field_from_order, make_field


def test_prime_field_tables():
    F = make_field(5, 1)
    assert F.q == 5 and F.p == 5 and F.kabs == 1
    assert F.add(3, 4) == 2
    assert F.mul(3, 4) == 2
    assert F.neg(2) == 3
    assert F.inv(4) == 4
    assert F.pow(2, 10) == 4


def test_extension_and_caching():
    F4 = field_from_order(4)
    assert F4 is make_field(2, 2)
    F16 = extension_field(F4, 2)
    assert F16.q == 16 and F16.base is F4
    assert extension_field(F4, 2) is F16
    assert extension_field(F4, 1) is F4


def test_field_from_order_rejects_non_prime_power():
    with pytest.raises(InputError):
        field_from_order(6)
    with pytest.raises(InputError):
        field_from_order(1)


def test_digits_round_trip():
    F4 = field_from_order(4)
    E = extension_field(F4, 3)
    for x in range(E.q):
        d = E.digits(x)
        assert len(d) == 3 and all(0 <= c < 4 for c in d)
        assert E.undigits(d) == x


def test_frobenius_fixes_base_field():
    F = field_from_order(9)
    E = extension_field(F, 2)
    for c in range(F.q):
        x = E.undigits([c, 0])
        assert E.pow(x, 9) == x


@given(st.sampled_from([2, 3, 4, 5, 8, 9, 27]), st.data())
def test_field_axioms_sampled(q, data):
    F = field_from_order(q)
    a = data.draw(st.integers(0, q - 1))
    b = data.draw(st.integers(0, q - 1))
    c = data.draw(st.integers(0, q - 1))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.sub(a, b) == F.add(a, F.neg(b))
    if b:
        assert F.mul(F.div(a, b), b) == a
        assert F.mul(b, F.inv(b)) == 1


def test_multiplicative_generator_order():
    for q in (4, 8, 9, 25):
        F = field_from_order(q)
        g = F.multiplicative_generator()
        seen = set()
        x = 1
        for _ in range(q - 1):
            x = F.mul(x, g)
            seen.add(x)
        assert len(seen) == q - 1 and x == 1


def test_trace_is_additive_to_prime_field():
    F = field_from_order(8)
    for a in range(8):
        for b in range(8):
            s = F.trace_abs(F.add(a, b))
            assert s == (F.trace_abs(a) + F.trace_abs(b)) % 2
    # x + x^3 + x^9 for F_27 lands in F_3 and matches trace_abs
    F27 = field_from_order(27)
    for a in range(27):
        t = F27.add(a, F27.add(F27.pow(a, 3), F27.pow(a, 9)))
        d = F27.digits(t)
        assert list(d[1:]) == [0] * (len(d) - 1)
        assert F27.trace_abs(a) == d[0]
