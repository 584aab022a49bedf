import random

import numpy as np
import pytest

from dscurves.curves import (
    FamilyParams,
    Hyperelliptic,
    count_points,
    curve_from_str,
    drinfeld_dl_counts,
    family_zeta,
    hermitian_curve,
    howe_cubic,
    howe_interpolation,
    ree_affine_count,
    suzuki_curve,
)
from dscurves.curves import kernels
from dscurves.curves.scantables import scan_tables
from dscurves.errors import InputError, NotACurveError, SizeLimitError
from dscurves.fields import extension_field, field_from_order, make_field
from dscurves.fpoly import FieldPoly
from dscurves.zeta import ZetaData


# ---------------------------------------------------------------------------
# model validation


def test_char2_needs_h():
    with pytest.raises(NotACurveError):
        curve_from_str("hyp q=2 f=x^5+x^3")


def test_char2_singular_where_h_vanishes():
    with pytest.raises(NotACurveError):
        curve_from_str("hyp q=2 h=x f=x^3")


def test_char2_split_model_rejected():
    # x^2 + x = g^2 + h g with g = x, h = 1: two rational sheets
    with pytest.raises(NotACurveError):
        curve_from_str("hyp q=2 h=1 f=x^2+x")


def test_odd_char_repeated_root_rejected():
    with pytest.raises(NotACurveError):
        curve_from_str("hyp q=3 f=x^2")
    with pytest.raises(NotACurveError):
        curve_from_str("hyp q=3 f=x^3")


def test_constant_model_rejected():
    with pytest.raises(NotACurveError):
        curve_from_str("hyp q=3 f=1")


def test_plane_singular_rejected():
    # x^3 + y^3 + z^3 = (x + y + z)^3 in characteristic 3
    with pytest.raises(NotACurveError):
        curve_from_str("plane q=3 F=x^3+y^3+z^3")


def test_plane_nonhomogeneous_rejected():
    with pytest.raises(InputError):
        curve_from_str("plane q=2 F=x^3+y^2")


# ---------------------------------------------------------------------------
# the one-line notation


def test_parser_errors():
    bad = [
        "",
        "hyp",
        "hyp f=x^3+x",
        "hyp q=2 h=1 f=x^3+x f=x^5",
        "hyp q=2 h=1 f=x^3+x extra=1",
        "hyp q=2 h=1 f=x^3+x junk",
        "quartic q=2 f=x^3+x",
        "plane q=4 G=x^3+y^3+z^3",
    ]
    for s in bad:
        with pytest.raises(InputError):
            curve_from_str(s)


def test_implicit_products_rejected():
    with pytest.raises(InputError):
        curve_from_str("hyp q=3 f=x^3+2x+1")


def test_parsed_models_round_trip():
    c = curve_from_str("hyp q=3 f=x^3+2*x+1")
    assert isinstance(c, Hyperelliptic)
    assert c.genus == 1
    assert c.h == FieldPoly.zero(c.field)
    assert repr(c) == "Hyperelliptic(q=3, h=0, f=x^3+2*x+1)"


def test_genus_from_weighted_degree():
    assert curve_from_str("hyp q=2 h=1 f=x^5+x^3").genus == 2
    assert curve_from_str("hyp q=2 h=x^3+x+1 f=x^5+x^4+x^3+x").genus == 2
    assert curve_from_str("hyp q=2 h=x^6+x^5+x^4+x^3+x^2+x+1 f=x^13+x^5+x+1").genus == 6
    assert curve_from_str("plane q=4 F=x^3+y^3+z^3").genus == 1


# ---------------------------------------------------------------------------
# point counts against published values


def test_count_goldens():
    assert count_points(curve_from_str("hyp q=2 h=1 f=x^5+x^3"), 1) == 5
    assert count_points(curve_from_str("plane q=4 F=x^3+y^3+z^3"), 1) == 9


def test_supersingular_elliptic_tower():
    # y^2 + y = x^3 read over F_4, F_16 and, separately, over F_2
    c4 = curve_from_str("hyp q=4 h=1 f=x^3")
    assert count_points(c4, 1) == 9
    assert count_points(c4, 2) == 9
    c2 = curve_from_str("hyp q=2 h=1 f=x^3")
    assert count_points(c2, 1) == 3


GENUS1_ROWS = [
    ("hyp q=2 h=1 f=x^3+x", 2, 5),
    ("hyp q=2 h=x f=x^3+1", 3, 4),
    ("hyp q=3 f=x^3+2*x+1", 2, 7),
    ("hyp q=4 h=1 f=x^3", 2, 9),
]

GENUS2_ROWS = [
    ("hyp q=2 h=x^2+x f=x^5+x^3+x^2+x", 2, 3),
    ("hyp q=2 h=x f=x^5+x", 2, 4),
    ("hyp q=2 h=1 f=x^5+x^3", 2, 5),
    ("hyp q=2 h=x^3+x+1 f=x^5+x^4+x^3+x", 2, 6),
    ("hyp q=2 h=1 f=x^5+x^3+1", 3, 1),
    ("hyp q=2 h=x f=x^5+x^2+x", 3, 2),
    ("hyp q=2 h=1 f=x^5+x^4", 3, 5),
    ("hyp q=3 f=x^5+2*x^4+2*x^3+2*x", 2, 5),
    ("hyp q=3 f=x^6+x^4+x^2+1", 3, 8),
    ("hyp q=5 f=x^5+4*x", 2, 6),
]


@pytest.mark.parametrize("model,m,n1", GENUS1_ROWS + GENUS2_ROWS)
def test_stable_rows_count_and_stay_stable(model, m, n1):
    c = curve_from_str(model)
    counts = [count_points(c, j) for j in range(1, m + 1)]
    assert counts[0] == n1
    assert counts[m - 1] == n1
    z = ZetaData.from_counts(c.field.q, c.genus, counts[: c.genus])
    assert z.ds_check(m)


def test_genus2_remark_pair():
    c = curve_from_str("hyp q=4 h=x^2+x f=a*(x^5+x^3+x^2+x)")
    assert count_points(c, 1) == 5
    assert count_points(c, 2) == 7


def test_genus6_tower_exact():
    c = curve_from_str("hyp q=2 h=x^6+x^5+x^4+x^3+x^2+x+1 f=x^13+x^5+x+1")
    want = [3, 5, 9, 17, 33, 11, 129, 257, 513, 1025, 2049, 4379]
    assert [count_points(c, m) for m in range(1, 13)] == want


def test_infinity_weighting():
    # h has degree g + 1 and trace(f_{2g+2} / h_{g+1}^2) = 0: two points
    # at infinity, which the affine kernel cannot see
    c = curve_from_str("hyp q=2 h=x^3+x+1 f=x^5+x^4+x^3+x")
    assert c.infinity_coeffs() == (1, 0)
    E = c.field
    t = scan_tables(E)
    affine = kernels.hyp2_affine(
        np.array(c.f.coeffs, dtype=np.int64),
        np.array(c.h.coeffs, dtype=np.int64),
        t.EXP, t.LOG, t.Q, t.trmask,
    )
    assert count_points(c, 1) == affine + 2


# ---------------------------------------------------------------------------
# kernel backends agree with each other and with a naive scan


def _naive_count(c, m):
    E = extension_field(c.field, m)
    fco = list(c.f.coeffs) or [0]
    hco = list(c.h.coeffs) or [0]
    n = 0
    for x in range(E.q):
        vf = 0
        for cc in reversed(fco):
            vf = E.add(E.mul(vf, x), cc)
        vh = 0
        for cc in reversed(hco):
            vh = E.add(E.mul(vh, x), cc)
        for y in range(E.q):
            if E.add(E.mul(y, y), E.sub(E.mul(vh, y), vf)) == 0:
                n += 1
    g = c.genus
    h1 = c.h.coeffs[g + 1] if c.h.degree >= g + 1 else 0
    f2 = c.f.coeffs[2 * g + 2] if c.f.degree >= 2 * g + 2 else 0
    if c.field.p == 2:
        if h1 == 0:
            n += 1
        elif E.trace_abs(E.div(f2, E.mul(h1, h1))) == 0:
            n += 2
    else:
        w = E.add(E.mul(4 % E.p, f2), E.mul(h1, h1))
        if w == 0:
            n += 1
        elif E.pow(w, (E.q - 1) // 2) == 1:
            n += 2
    return n


def _random_models(q, deg, count, seed):
    rng = random.Random(seed)
    F = field_from_order(q)
    out = []
    while len(out) < count:
        f = [rng.randrange(q) for _ in range(deg)] + [1]
        h = [rng.randrange(q) for _ in range(deg // 2 + 1)]
        try:
            out.append(Hyperelliptic(F, h if q % 2 == 0 else (), f))
        except NotACurveError:
            continue
    return out


@pytest.mark.parametrize("q,deg", [(2, 5), (2, 7), (3, 5), (3, 6), (4, 5), (5, 5)])
def test_counts_match_naive_scan(q, deg):
    for c in _random_models(q, deg, 8, seed=q * 100 + deg):
        for m in (1, 2):
            assert count_points(c, m) == _naive_count(c, m)


def test_backend_variants_agree():
    impls = kernels.variants()
    assert set(impls) == {"numpy", "numba"}
    E2 = extension_field(make_field(2, 1), 4)
    t2 = scan_tables(E2)
    E3 = extension_field(make_field(3, 1), 2)
    t3 = scan_tables(E3)
    rng = random.Random(7)
    for _ in range(25):
        fco = np.array([rng.randrange(16) for _ in range(6)], dtype=np.int64)
        hco = np.array([rng.randrange(16) for _ in range(3)], dtype=np.int64)
        a = impls["numpy"]["hyp2"](fco, hco, t2.EXP, t2.LOG, t2.Q, t2.trmask)
        b = impls["numba"]["hyp2"](fco, hco, t2.EXP, t2.LOG, t2.Q, t2.trmask)
        assert int(a) == int(b)
        fco = np.array([rng.randrange(9) for _ in range(6)], dtype=np.int64)
        hco = np.array([0], dtype=np.int64)
        inv4 = E3.inv(4 % 3)
        a = impls["numpy"]["hypodd"](
            fco, hco, t3.EXP, t3.LOG, t3.CHI, t3.Q, 3, E3.kabs, inv4
        )
        b = impls["numba"]["hypodd"](
            fco, hco, t3.EXP, t3.LOG, t3.CHI, t3.Q, 3, E3.kabs, inv4
        )
        assert int(a) == int(b)


def test_backend_env_flag(tmp_path):
    import subprocess
    import sys

    code = (
        "from dscurves.curves.kernels import BACKEND\n"
        "print(BACKEND)\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True, text=True,
        env={"DSCURVES_NO_NUMBA": "1", "PATH": "/usr/bin:/bin"},
    )
    assert out.stdout.strip() == "numpy"


# ---------------------------------------------------------------------------
# named families


def test_hermitian_counts():
    for q0 in (2, 3):
        c = hermitian_curve(q0)
        z = family_zeta(FamilyParams("hermitian", q0))
        assert c.genus == q0 * (q0 - 1) // 2 == z.g
        assert count_points(c, 1) == q0**3 + 1 == z.count(1)
        assert count_points(c, 2) == z.count(2)


def test_suzuki_counts():
    c = suzuki_curve(1)
    z = family_zeta(FamilyParams("suzuki", 1))
    assert z.q == 8 and z.g == 14
    assert z.counts_list(3) == [65, 65, 65]
    assert [count_points(c, m) for m in (1, 2, 3)] == [65, 65, 65]


def test_ree_counts():
    z = family_zeta(FamilyParams("ree", 1))
    assert z.q == 27 and z.g == 3627
    assert z.count(1) == 19684
    assert ree_affine_count(1) + 1 == 19684


def test_drinfeld_dl_counts():
    for q in (3, 5):
        assert drinfeld_dl_counts(q, 1) == 1 + q
        assert drinfeld_dl_counts(q, 2) == 1 + q
    with pytest.raises(InputError):
        drinfeld_dl_counts(4, 1)


def test_family_spelling_is_forgiving():
    a = family_zeta(FamilyParams("Hermitian", 2))
    b = family_zeta(FamilyParams("hermitian", 2))
    assert a == b
    with pytest.raises(InputError):
        family_zeta(FamilyParams("drinfeld_dl", 3))
    with pytest.raises(InputError):
        family_zeta(FamilyParams("lucchini", 2))


# ---------------------------------------------------------------------------
# the two bespoke constructions


def test_howe_cubic_counts():
    for q, n in ((3, 2), (5, 2)):
        c = howe_cubic(q, n)
        assert count_points(c, 1) == 1
        assert count_points(c, 3) == 1
    with pytest.raises(InputError):
        howe_cubic(3, 1)
    with pytest.raises(InputError):
        howe_cubic(4, 2)
    with pytest.raises(SizeLimitError):
        howe_cubic(17, 3)


def test_howe_interpolation_deterministic():
    c = howe_interpolation(3)
    assert c == howe_interpolation(3, seed=0)
    assert c.genus <= 3
    assert count_points(c, 1) == count_points(c, 2)


# ---------------------------------------------------------------------------
# size caps


def test_scan_caps():
    with pytest.raises(SizeLimitError):
        count_points(curve_from_str("hyp q=2 h=1 f=x^5+x^3"), 27)
    with pytest.raises(SizeLimitError):
        count_points(curve_from_str("plane q=4 F=x^3+y^3+z^3"), 11)
    with pytest.raises(SizeLimitError):
        ree_affine_count(1, 2)
