import pytest

from dscurves.carlitz import (
    carlitz_action,
    carlitz_phi,
    ds_criterion_51,
    place_counts,
    residual_degree,
    unit_group,
    zero_places_52,
    zero_places_52_range,
    zeta_numerator,
)
from dscurves.errors import InputError, SizeLimitError
from dscurves.fields import make_field
from dscurves.fpoly import FieldPoly, poly_from_str

from oracles import carlitz_unramified_places

F2 = make_field(2, 1)
F3 = make_field(3, 1)


def _p2(s):
    return poly_from_str(F2, s, var="t")


def _p3(s):
    return poly_from_str(F3, s, var="t")


# ---------------------------------------------------------------------------
# unit groups


def test_unit_group_orders():
    assert unit_group(_p2("t")).order == 1
    assert unit_group(_p2("t^2")).order == 2
    assert unit_group(_p2("t^3+t+1")).order == 7
    assert unit_group(_p2("t^4+t^2+1")).order == 12  # (t^2+t+1)^2
    assert unit_group(_p3("t")).order == 2
    assert unit_group(_p3("t^2+1")).order == 8


def test_subgroup_index():
    M = _p2("t^3+t+1")
    G = unit_group(M, gens=[_p2("t")])
    assert G.order == 7
    assert G.subgroup_order == 7
    assert G.index == 1
    G = unit_group(_p3("t^2+1"), gens=[_p3("2")])
    assert G.index == 4


def test_residual_degree_is_frobenius_order():
    G = unit_group(_p2("t^3+t+1"))
    # t^2+t+1 mod t^3+t+1 generates a class of order dividing 7
    f = residual_degree(_p2("t^2+t+1"), G)
    assert f == 7
    with pytest.raises(InputError):
        residual_degree(_p2("t^2+1"), G)  # (t+1)^2 is not prime
    with pytest.raises(InputError):
        residual_degree(_p2("t^3+t+1"), G)  # divides the modulus


# ---------------------------------------------------------------------------
# torsion polynomials


def test_action_degree_and_linearity():
    act = carlitz_action(_p2("t^2+t"))
    phi = act.to_xpoly()
    assert max(phi.terms) == 4
    assert set(phi.terms) <= {1, 2, 4}


def test_phi_small_goldens():
    assert carlitz_phi(_p2("t")).to_str("x") == "x+t"
    assert carlitz_phi(_p3("t")).to_str("x") == "x^2+t"
    assert carlitz_phi(_p2("t^2+t")).to_str("x") == "x+1"
    assert carlitz_phi(_p2("t^2")).to_str("x") == "x^2+t*x+t"


def test_phi_degree_is_unit_count():
    for mk, s in ((_p2, "t^2+t+1"), (_p2, "t^3+t"), (_p3, "t^2")):
        M = mk(s)
        assert max(carlitz_phi(M).terms) == unit_group(M).order


def test_phi_product_over_divisors():
    # [M] = prod of Phi_D over monic divisors D, checked by degree count
    M = _p2("t^3+t")
    total = sum(
        unit_group(_p2(s)).order
        for s in ("t", "t+1", "t^2+t", "t^2+1", "t^3+t")
    ) + 1  # Phi_1 = x
    assert 2 ** M.degree == total
    assert max(carlitz_phi(M).terms) == unit_group(M).order


def test_phi_monic_and_cap():
    with pytest.raises(InputError):
        carlitz_phi(FieldPoly(F3, (1, 2)))
    with pytest.raises(SizeLimitError):
        carlitz_phi(_p2("t^11+t^2+1"))


# ---------------------------------------------------------------------------
# the two worked covers


def test_full_cover_of_a_quartic():
    G = unit_group(_p2("t^4+t+1"))
    z = zeta_numerator(G)
    assert z.q == 2 and z.g == 14
    assert z.P[0] == 1 and z.P[28] == 2**14
    assert z.is_weil()
    assert z.places(6) == [15, 0, 0, 1, 0, 5]
    assert place_counts(G, 6) == [15, 0, 0, 1, 0, 5]


def test_squared_sextic_places():
    M = _p2("t^6+t+1")
    G = unit_group(M * M)
    assert place_counts(G, 11) == [4032, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]
    assert ds_criterion_51(G, 5)
    assert zero_places_52_range(G) == [2, 3, 4, 5, 7, 8, 9, 10, 11]
    assert not zero_places_52(G, 6)


def test_criterion_51_validation():
    G = unit_group(_p2("t^6+t+1"))
    with pytest.raises(InputError):
        ds_criterion_51(G, 4)
    # a degree-1 factor of M defeats the criterion outright
    assert not ds_criterion_51(unit_group(_p2("t^3+t^2")), 3)


def test_zero_places_52_validation():
    M = _p2("t^6+t+1")
    G = unit_group(M * M)
    with pytest.raises(InputError):
        zero_places_52(G, 1)
    with pytest.raises(InputError):
        zero_places_52(G, 12)
    H = unit_group(M * M, gens=[_p2("t")])
    with pytest.raises(InputError):
        zero_places_52(H, 3)


# ---------------------------------------------------------------------------
# the factoring route agrees with the group-order route


@pytest.mark.parametrize("mk,s,dmax", [
    (_p2, "t^2+t", 4),
    (_p2, "t^3+t+1", 4),
    (_p2, "t^4+t^2+1", 4),
    (_p3, "t^2+2", 3),
    (_p3, "t^2+t+2", 3),
])
def test_factoring_oracle_slice(mk, s, dmax):
    M = mk(s)
    assert carlitz_unramified_places(M, dmax) == (
        place_counts(unit_group(M), dmax, split=True)["unramified"]
    )


def test_split_components_sum():
    G = unit_group(_p2("t^4+t^3+1"))
    parts = place_counts(G, 5, split=True)
    total = place_counts(G, 5)
    for i in range(5):
        assert parts["total"][i] == (
            parts["unramified"][i] + parts["ramified"][i] + parts["infinite"][i]
        )
    assert parts["total"] == total


# ---------------------------------------------------------------------------
# caps


def test_group_and_zeta_caps():
    with pytest.raises(SizeLimitError):
        unit_group(_p2("t^24+t+1"))
    M = _p2("t^6+t+1")
    with pytest.raises(SizeLimitError):
        zeta_numerator(unit_group(M * M * M))
    with pytest.raises(InputError):
        place_counts(unit_group(M), 17)
