import random

import pytest

from dscurves.carlitz import carlitz_action, place_counts, unit_group
from dscurves.drinfeld import (
    DrinfeldAction,
    basechange_phi,
    constant_extension_places,
    descent_zero_places,
    drinfeld_action,
    drinfeld_phi,
    place_audit_rank3,
    rank3_check,
)
from dscurves.errors import InputError, SizeLimitError, ValidationError
from dscurves.fields import extension_field, make_field
from dscurves.fpoly import FieldPoly, RatFunc, poly_from_str, ratfunc_from_str
from dscurves.zeta import ZetaData

F2 = make_field(2, 1)
F3 = make_field(3, 1)

FOOTNOTE_U = ("t*(t^2+t+1)/(t^3+t+1)", "t*(t+1)^2/(t^3+t+1)", "1")


def _p(F, s):
    return poly_from_str(F, s, var="t")


def _u(F, *strings):
    return [ratfunc_from_str(F, s) for s in strings]


# ---------------------------------------------------------------------------
# the module action


def test_action_is_multiplicative():
    rng = random.Random(11)
    for F, rank, dmax in ((F2, 1, 5), (F2, 2, 2), (F2, 3, 1), (F3, 1, 3), (F3, 2, 1)):
        u = [RatFunc.const(F, 1 + rng.randrange(F.q - 1) if i == rank - 1 else rng.randrange(F.q))
             for i in range(rank)]
        if not u[-1]:
            u[-1] = RatFunc.const(F, 1)
        D = DrinfeldAction(F, u)
        for _ in range(4):
            d1 = rng.randrange(1, dmax + 1)
            d2 = max(1, dmax - d1)
            M1 = FieldPoly(F, [rng.randrange(F.q) for _ in range(d1)] + [1])
            M2 = FieldPoly(F, [rng.randrange(F.q) for _ in range(d2)] + [1])
            lhs = drinfeld_action(D, M1 * M2)
            rhs = drinfeld_action(D, M1) * drinfeld_action(D, M2)
            assert lhs.coeffs == rhs.coeffs


def test_rank1_unit_action_is_carlitz():
    for F in (F2, F3):
        D = DrinfeldAction(F, [RatFunc.const(F, 1)])
        for s in ("t", "t^2+1", "t^3+t+1" if F is F2 else "t^2+t+2"):
            M = _p(F, s)
            mine = drinfeld_action(D, M).to_xpoly().terms
            ref = carlitz_action(M).to_xpoly().terms
            assert set(mine) == set(ref)
            for e, c in ref.items():
                assert mine[e] == RatFunc(c)


def test_action_validation():
    with pytest.raises(InputError):
        DrinfeldAction(F2, [])
    with pytest.raises(InputError):
        DrinfeldAction(F2, [RatFunc.const(F2, 1), RatFunc.const(F2, 0)])
    D = DrinfeldAction(F2, _u(F2, "t", "1"))
    with pytest.raises(InputError):
        drinfeld_action(D, FieldPoly.zero(F2))
    with pytest.raises(InputError):
        drinfeld_action(D, _p(F3, "t"))
    with pytest.raises(SizeLimitError):
        drinfeld_action(D, _p(F2, "t^6+t+1"))


def test_torsion_of_t_is_symbolic_in_u():
    u1, u2, u3 = _u(F2, "t", "t+1", "t^2")
    D = DrinfeldAction(F2, (u1, u2, u3))
    phi = drinfeld_phi(D, _p(F2, "t"))
    assert set(phi.terms) == {7, 3, 1, 0}
    assert phi.terms[7] == u3
    assert phi.terms[3] == u2
    assert phi.terms[1] == u1
    assert phi.terms[0] == RatFunc(_p(F2, "t"))


def test_footnote_module_torsion_string():
    D = DrinfeldAction(F2, _u(F2, *FOOTNOTE_U))
    phi = drinfeld_phi(D, _p(F2, "t"))
    assert phi.to_str("x") == (
        "x^7+((t^3+t)/(t^3+t+1))*x^3+((t^3+t^2+t)/(t^3+t+1))*x+t"
    )


# ---------------------------------------------------------------------------
# the rank-3 non-stability certificate


def test_footnote_module_passes():
    v = rank3_check(*_u(F2, *FOOTNOTE_U))
    assert v.overall
    assert all(v)


def test_mutations_fail_the_stated_leg():
    v = rank3_check(*_u(F2, "1", "1", "1"))
    assert not v.eisenstein_u2
    assert not v.overall
    v = rank3_check(*_u(F2, "t", "t", "1"))
    assert not v.quadratic_not_factor
    assert not v.overall


def test_rank3_check_wants_base_field():
    F4 = make_field(2, 2)
    with pytest.raises(InputError):
        rank3_check(*_u(F4, "t", "t", "1"))


def test_audit_agrees_with_checklist():
    report = place_audit_rank3(*_u(F2, *FOOTNOTE_U))
    assert report["new_degree_2_places"] == 0
    assert report["conclusive"]
    assert report["ds_for_F4_over_F2"] is True
    for place in ("t", "1/t", "t+1", "t^2+t+1"):
        assert report[place]["conclusive"]


def test_audit_validation():
    with pytest.raises(InputError):
        place_audit_rank3(*_u(F2, "1", "1", "t"))  # ord_t(u3) != 0
    with pytest.raises(InputError):
        place_audit_rank3(*_u(F2, "1/(t+1)", "1", "1"))


# ---------------------------------------------------------------------------
# base change of the coefficient field


def test_basechange_golden():
    r = basechange_phi(2, 2, _p(F2, "t^3+t+1"))
    assert r.routes_equal and r.coefficients_in_base
    assert r.phi.to_str("x") == (
        "x^63+(t^16+t^4+t)*x^15+(t^8+t^5+t^2+1)*x^3+(t^3+t+1)"
    )


def test_basechange_trivial_modulus():
    r = basechange_phi(2, 2, _p(F2, "t"))
    assert r.phi.to_str("x") == "x^3+t"


def test_basechange_random_moduli():
    rng = random.Random(23)
    done = 0
    while done < 12:
        q, n = rng.choice(((2, 2), (2, 3), (3, 2)))
        F = F2 if q == 2 else F3
        d = rng.randrange(1, 4)
        M = FieldPoly(F, [rng.randrange(q) for _ in range(d)] + [1])
        try:
            r = basechange_phi(q, n, M)
        except InputError:
            continue
        assert r.routes_equal and r.coefficients_in_base
        done += 1


def test_basechange_splitting_witness():
    # t^2+t+1 splits over F_4
    with pytest.raises(InputError, match="factor"):
        basechange_phi(2, 2, _p(F2, "t^2+t+1"))
    with pytest.raises(InputError):
        basechange_phi(3, 2, _p(F2, "t"))


# ---------------------------------------------------------------------------
# descent of vanishing place counts


def test_descent_golden():
    assert descent_zero_places(2, 2, _p(F2, "t^3+t+1")) == {4}


def test_descent_quintic():
    out = descent_zero_places(2, 2, _p(F2, "t^5+t^2+1"))
    assert 4 in out


def test_descent_validation():
    with pytest.raises(InputError):
        descent_zero_places(2, 4, _p(F2, "t^5+t^2+1"))
    with pytest.raises(InputError):
        descent_zero_places(2, 3, _p(F2, "t^3+t+1"))
    with pytest.raises(InputError):
        descent_zero_places(2, 2, _p(F2, "t^3+t^2"))


# ---------------------------------------------------------------------------
# places over constant field extensions


def test_constant_extension_identity_and_consistency():
    G = unit_group(_p(F2, "t^4+t+1"))
    from dscurves.carlitz import zeta_numerator

    z = zeta_numerator(G)
    a1 = {j: z.count(j) for j in range(1, 13)}
    assert constant_extension_places(a1, 1, 1) == a1[1]
    want = z.places(6)
    got = [constant_extension_places(a1, 1, k) for k in range(1, 7)]
    assert got == want


def test_constant_extension_errors():
    with pytest.raises(InputError):
        constant_extension_places({1: 3}, 1, 2)
    with pytest.raises(ValidationError):
        constant_extension_places({1: 3, 2: 4}, 1, 2)
    with pytest.raises(InputError):
        constant_extension_places({1: 3}, 0, 1)
