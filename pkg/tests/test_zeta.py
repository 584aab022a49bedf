import pytest
from hypothesis import given, strategies as st

from dscurves.errors import InputError, NotACurveError
from dscurves.zeta import (
    ZetaData,
    admissible_pairs,
    ds_check,
    extend_counts,
    frobenius_from_counts,
    frobenius_from_real_weil,
    hws_interval,
    is_weil_valid,
    places_from_points,
    points_from_places,
    real_weil_from_frobenius,
)

# worked genus-5 example used throughout: counts, numerator, real Weil poly
COUNTS5 = [9, 9, 9, 17, 9]
P5 = [1, 6, 20, 48, 92, 144, 184, 192, 160, 96, 32]
H5 = [0, -8, 0, 10, 6, 1]


def test_worked_example_round_trips():
    z = ZetaData.from_counts(2, 5, COUNTS5)
    assert list(z.P) == P5
    assert z.real_weil() == H5
    assert z.counts_list(5) == COUNTS5
    assert z.places(5) == [9, 0, 0, 2, 0]
    assert ZetaData.from_real_weil(2, H5) == z
    assert ZetaData.from_places(2, 5, [9, 0, 0, 2, 0]) == z
    assert frobenius_from_counts(2, 5, COUNTS5) == z
    assert real_weil_from_frobenius(z) == H5
    assert frobenius_from_real_weil(2, H5) == z
    assert z.is_weil()


def test_functional_equation_enforced():
    with pytest.raises(NotACurveError):
        ZetaData(2, 1, (1, 2, 3))
    ZetaData(2, 1, (1, 2, 2))


def test_base_extend_matches_counts():
    z = ZetaData.from_counts(2, 5, COUNTS5)
    w = z.base_extend(2)
    assert w.q == 4
    assert w.counts_list(2) == [z.count(2), z.count(4)]


def test_ds_check_divisor_chain():
    z = ZetaData.from_counts(2, 5, COUNTS5)
    # N_1 = N_2 = N_3 but N_4 jumps, so 2 and 3 are stable and 4 is not
    assert z.ds_check(2) and z.ds_check(3)
    assert not z.ds_check(4)
    for m in range(2, 9):
        assert ds_check(z, m) == (z.count(m) == z.count(1))
    assert z.ds_check(1)
    with pytest.raises(InputError):
        z.ds_check(0)


def test_extend_counts_small_elliptic():
    z = ZetaData.from_counts(2, 1, [5])
    assert extend_counts(z, 4) == [5, 5, 5, 25]


def test_mobius_conversions_known_pair():
    counts = [3, 5, 9, 17, 33, 11]
    places = places_from_points(counts)
    assert places == [3, 1, 2, 3, 6, 0]
    assert points_from_places(places) == counts


def test_places_reject_inconsistent_counts():
    with pytest.raises(NotACurveError):
        places_from_points([3, 2])


@given(st.integers(1, 6), st.data())
def test_mobius_round_trip(k, data):
    places = data.draw(st.lists(st.integers(0, 50), min_size=k, max_size=k))
    assert places_from_points(points_from_places(places)) == places


@given(st.sampled_from([2, 3, 4, 5, 7, 9]), st.integers(1, 4), st.data())
def test_real_weil_round_trip_on_valid_h(q, g, data):
    # roots are forced into the Weil window, so h is always realizable
    import math

    lim = math.isqrt(4 * q)
    roots = data.draw(
        st.lists(st.integers(-lim, lim), min_size=g, max_size=g)
    )
    h = [1]
    for r in roots:
        h = [0] + h
        for i in range(len(h) - 1):
            h[i] -= r * h[i + 1]
    z = ZetaData.from_real_weil(q, h)
    assert z.real_weil() == h
    assert z.g == g
    assert is_weil_valid(h, q)
    back = ZetaData.from_counts(q, g, z.counts_list(g))
    assert back == z


def test_is_weil_valid_boundaries():
    # root at exactly 2 sqrt(q) is allowed, outside is not
    assert is_weil_valid([-4, 1], 4)
    assert not is_weil_valid([-5, 1], 4)
    assert is_weil_valid([4, 1], 4)
    # complex roots fail
    assert not is_weil_valid([1, 0, 1], 2)


def test_hws_interval_small_cases():
    assert hws_interval(2, 1) == (1, 5)
    assert hws_interval(3, 1) == (1, 7)
    assert hws_interval(2, 2) == (0, 7)
    lo, hi = hws_interval(4, 3)
    assert lo == 0 and hi == 17


ADMISSIBLE_G1 = [(2, 2), (2, 3), (3, 2), (4, 2)]


def test_admissible_pairs_low_genus():
    assert admissible_pairs(1) == ADMISSIBLE_G1
    g2 = admissible_pairs(2)
    assert (2, 4) in g2 and (5, 2) in g2 and (7, 2) not in g2
    with pytest.raises(InputError):
        admissible_pairs(0)


def test_admissible_pairs_monotone_in_genus():
    for g in (1, 2, 3, 4):
        assert set(admissible_pairs(g)) <= set(admissible_pairs(g + 1))


def test_admissible_pairs_mmax_truncates():
    full = admissible_pairs(3)
    capped = admissible_pairs(3, mmax=2)
    assert capped == [(q, m) for q, m in full if m <= 2]
