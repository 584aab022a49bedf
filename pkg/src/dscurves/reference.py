"""Pinned reference values and the reproduction targets built on them.

Each run_* function recomputes one published table or worked example
through the ordinary library surface and reports an item-by-item
comparison against the frozen values below, so any regression is caught
by name rather than by a bare exit code.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

from .carlitz import (
    ds_criterion_51,
    place_counts,
    unit_group,
    zero_places_52,
    zeta_numerator,
)
from .curves import (
    FamilyParams,
    count_points,
    curve_from_str,
    drinfeld_dl_counts,
    family_zeta,
    hermitian_curve,
    howe_cubic,
    ree_affine_count,
    suzuki_curve,
)
from .drinfeld import basechange_phi, descent_zero_places, rank3_check
from .enumtree import PartialCandidate, accept, enumerate as enumerate_candidates
from .enumtree import prune_range
from .errors import InputError
from .fields import make_field
from .fpoly import poly_from_str, ratfunc_from_str
from .zeta import ZetaData, admissible_pairs, places_from_points

__all__ = ["Item", "TARGETS", "run_target"]


class Item(NamedTuple):
    """One named comparison inside a reproduction target."""

    name: str
    ok: bool
    expected: object
    got: object


def _item(name: str, expected, got) -> Item:
    return Item(name, expected == got, expected, got)


# Admissible (q, m) tables for genus 1..5.
ADMISSIBLE = {
    1: ((2, 2), (2, 3), (3, 2), (4, 2)),
    2: ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2)),
    3: (
        (2, 2), (2, 3), (2, 4), (2, 5),
        (3, 2), (3, 3), (4, 2), (4, 3),
        (5, 2), (7, 2), (8, 2), (9, 2),
    ),
    4: (
        (2, 2), (2, 3), (2, 4), (2, 5), (2, 6),
        (3, 2), (3, 3), (3, 4), (4, 2), (4, 3),
        (5, 2), (7, 2), (8, 2), (9, 2), (11, 2),
    ),
    5: (
        (2, 2), (2, 3), (2, 4), (2, 5), (2, 6),
        (3, 2), (3, 3), (3, 4), (4, 2), (4, 3),
        (5, 2), (5, 3), (7, 2), (8, 2), (9, 2), (11, 2), (13, 2),
    ),
}

# Genus-1 catalogue rows (q, m, model, N) with N = #C(F_q) = #C(F_{q^m}).
GENUS1_ROWS = (
    (2, 2, "hyp q=2 h=1 f=x^3+x", 5),
    (2, 3, "hyp q=2 h=x f=x^3+1", 4),
    (2, 3, "hyp q=2 h=1 f=x^3+x", 5),
    (3, 2, "hyp q=3 f=x^3+2*x+1", 7),
    (4, 2, "hyp q=4 h=1 f=x^3", 9),
)

# Genus-2 catalogue rows, same shape.
GENUS2_ROWS = (
    (2, 2, "hyp q=2 h=x^2+x f=x^5+x^3+x^2+x", 3),
    (2, 2, "hyp q=2 h=x f=x^5+x", 4),
    (2, 2, "hyp q=2 h=1 f=x^5+x^3", 5),
    (2, 2, "hyp q=2 h=x^3+x+1 f=x^5+x^4+x^3+x", 6),
    (2, 3, "hyp q=2 h=1 f=x^5+x^3+1", 1),
    (2, 3, "hyp q=2 h=x f=x^5+x^2+x", 2),
    (2, 3, "hyp q=2 h=1 f=x^5+x^4", 5),
    (3, 2, "hyp q=3 f=x^5+2*x^4+2*x^3+2*x", 5),
    (3, 3, "hyp q=3 f=x^6+x^4+x^2+1", 8),
    (5, 2, "hyp q=5 f=x^5+4*x", 6),
)

# The genus-2 companion curve over F_4 that stops being stable one step up.
GENUS2_REMARK_MODEL = "hyp q=4 h=x^2+x f=a*(x^5+x^3+x^2+x)"

# Worked genus-5 example: counts, numerator, real Weil polynomial.
ELEPHANT_COUNTS = (9, 9, 9, 17, 9)
ELEPHANT_P = (1, 6, 20, 48, 92, 144, 184, 192, 160, 96, 32)
ELEPHANT_H = (0, -8, 0, 10, 6, 1)

# Genus-6 non-example over F_2 with its sixteen counts and place counts.
GENUS6_MODEL = "hyp q=2 h=x^6+x^5+x^4+x^3+x^2+x+1 f=x^13+x^5+x+1"
GENUS6_N = (
    3, 5, 9, 17, 33, 11, 129, 257,
    513, 1025, 2049, 4379, 8193, 16385, 32769, 65537,
)
GENUS6_A = (
    3, 1, 2, 3, 6, 0, 18, 30,
    56, 99, 186, 363, 630, 1161, 2182, 4080,
)

# Carlitz example 1: M = t^4+t+1 over F_2, trivial quotient subgroup.
CARLITZ_EX1_P = (
    1, 12, 77, 350, 1261, 3820, 10078, 23696, 50486, 98740,
    179179, 304418, 487863, 741820, 1074279, 1483640, 1951452,
    2435344, 2866864, 3159680, 3231104, 3033088, 2579968, 1955840,
    1291264, 716800, 315392, 98304, 16384,
)
CARLITZ_EX1_A = (15, 0, 0, 1, 0, 5, 30, 30, 60, 45, 210, 345, 690, 1095)

# Carlitz example 2: M = (t^6+t+1)^2 over F_2, place counts for d <= 11.
CARLITZ_EX2_A = (4032, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0)

# Rank-1 base change, q=2, n=2, M = t^3+t+1.
BASECHANGE_PHI = "x^63+(t^16+t^4+t)*x^15+(t^8+t^5+t^2+1)*x^3+(t^3+t+1)"

# Rank-3 tuple passing every descent hypothesis, and two single-condition
# spoilers: constant u_2 breaks the Eisenstein pattern at t, and u_1 =
# u_2 = t makes x^2+x+1 divide the torsion polynomial mod t+1.
FOOTNOTE_U = ("t*(t^2+t+1)/(t^3+t+1)", "t*(t+1)^2/(t^3+t+1)", "1")
MUTATIONS = (
    (("1", "1", "1"), "eisenstein_u2"),
    (("t", "t", "1"), "quadratic_not_factor"),
)


def _table_items(rows, g: int) -> list[Item]:
    out = []
    for q, m, model, n_ref in rows:
        c = curve_from_str(model)
        counts = [count_points(c, j) for j in range(1, g + 1)]
        n_m = count_points(c, m)
        z = ZetaData.from_counts(q, g, counts)
        got = [counts[0], n_m, z.ds_check(m)]
        out.append(_item(f"({q},{m}) {model}", [n_ref, n_ref, True], got))
    return out


def run_admissible(g: int) -> list[Item]:
    return [_item(f"admissible pairs g={g}", list(ADMISSIBLE[g]),
                  [tuple(p) for p in admissible_pairs(g)])]


def run_genus1_table() -> list[Item]:
    items = _table_items(GENUS1_ROWS, 1)
    c4 = curve_from_str("hyp q=4 h=1 f=x^3")
    items.append(_item("remark: counts over F_4, F_16",
                       [9, 9], [count_points(c4, 1), count_points(c4, 2)]))
    c2 = curve_from_str("hyp q=2 h=1 f=x^3")
    items.append(_item("remark: same equation over F_2", 3, count_points(c2, 1)))
    return items


def run_genus2_table() -> list[Item]:
    items = _table_items(GENUS2_ROWS, 2)
    c = curve_from_str(GENUS2_REMARK_MODEL)
    n1, n2 = count_points(c, 1), count_points(c, 2)
    items.append(_item("remark: new points one step up", [5, 7, 2],
                       [n1, n2, n2 - n1]))
    return items


def run_elephant() -> list[Item]:
    z = ZetaData.from_counts(2, 5, list(ELEPHANT_COUNTS))
    items = [
        _item("numerator coefficients", list(ELEPHANT_P), list(z.P)),
        _item("real Weil coefficients", list(ELEPHANT_H), z.real_weil()),
        _item("counts round trip", list(ELEPHANT_COUNTS), z.counts_list(5)),
    ]
    root = PartialCandidate(2, 5, (9,))
    rng = prune_range(root)
    items.append(_item("bound on a_2 after a_1=9", 4, rng.stop - 1))
    node = PartialCandidate(2, 5, (9, 0, 0, 2))
    survivors = [a for a in prune_range(node) if accept(node, a)]
    items.append(_item("survivors at (9,0,0,2)", [0], survivors))
    found = any(c.a == (9, 0, 0, 2, 0)
                for c in enumerate_candidates(2, 5, a1=9))
    items.append(_item("search emits (9,0,0,2,0)", True, found))
    return items


def run_nonds_genus6() -> list[Item]:
    c = curve_from_str(GENUS6_MODEL)
    counts = [count_points(c, m) for m in range(1, 17)]
    items = [
        _item("counts N_1..N_16", list(GENUS6_N), counts),
        _item("places a_1..a_16", list(GENUS6_A), places_from_points(counts)),
    ]
    z = ZetaData.from_counts(2, 6, counts[:6])
    pairs = [(q, m) for q, m in admissible_pairs(6) if q == 2]
    items.append(_item("admissible (2,m) all unstable",
                       [False] * len(pairs),
                       [z.ds_check(m) for _, m in pairs]))
    return items


def run_hermitian() -> list[Item]:
    items = []
    for q0 in (2, 3):
        n = q0**3 + 1
        z = family_zeta(FamilyParams("hermitian", q0))
        items.append(_item(f"q0={q0} closed-form counts", [n, n],
                           z.counts_list(2)))
        c = hermitian_curve(q0)
        items.append(_item(f"q0={q0} brute counts", [n, n],
                           [count_points(c, 1), count_points(c, 2)]))
    return items


def run_suzuki() -> list[Item]:
    z = family_zeta(FamilyParams("suzuki", 1))
    items = [_item("closed-form counts", [65, 65, 65], z.counts_list(3))]
    c = suzuki_curve(1)
    items.append(_item("brute counts over F_8, F_64", [65, 65],
                       [count_points(c, 1), count_points(c, 2)]))
    return items


def run_ree() -> list[Item]:
    z = family_zeta(FamilyParams("ree", 1))
    return [
        _item("genus", 3627, z.g),
        _item("closed-form counts", [19684] * 5, z.counts_list(5)),
        _item("affine scan plus infinity", 19684, ree_affine_count(1) + 1),
    ]


def run_drinfeld_dl() -> list[Item]:
    items = []
    for q in (3, 5):
        items.append(_item(f"q={q} counts", [q + 1, q + 1],
                           [drinfeld_dl_counts(q, 1), drinfeld_dl_counts(q, 2)]))
    return items


def run_carlitz_ex1() -> list[Item]:
    F = make_field(2, 1)
    G = unit_group(poly_from_str(F, "t^4+t+1"))
    z = zeta_numerator(G)
    a = place_counts(G, 14)
    return [
        _item("genus", 14, z.g),
        _item("numerator coefficients", list(CARLITZ_EX1_P), list(z.P)),
        _item("place counts a_1..a_14", list(CARLITZ_EX1_A), a),
        _item("places from counts agree", a,
              places_from_points(z.counts_list(14))),
    ]


def run_carlitz_ex2() -> list[Item]:
    F = make_field(2, 1)
    M = poly_from_str(F, "(t^6+t+1)^2")
    G = unit_group(M)
    ks = [k for k in range(2, 12) if k != 6]
    return [
        _item("place counts a_1..a_11", list(CARLITZ_EX2_A),
              place_counts(G, 11)),
        _item("degree-5 stability criterion", True, ds_criterion_51(G, 5)),
        _item("vanishing certified for k != 6", [True] * len(ks),
              [zero_places_52(G, k) for k in ks]),
        _item("k=6 not certified", False, zero_places_52(G, 6)),
    ]


def run_basechange() -> list[Item]:
    F = make_field(2, 1)
    M = poly_from_str(F, "t^3+t+1")
    r = basechange_phi(2, 2, M)
    return [
        _item("torsion polynomial", BASECHANGE_PHI, r.phi.to_str()),
        _item("routes agree", True, r.routes_equal),
        _item("coefficients descend", True, r.coefficients_in_base),
        _item("vanishing place indices", [4],
              sorted(descent_zero_places(2, 2, M))),
    ]


def run_rank3_footnote() -> list[Item]:
    F = make_field(2, 1)
    u = [ratfunc_from_str(F, s) for s in FOOTNOTE_U]
    v = rank3_check(*u)
    items = [_item("all hypotheses hold", [True] * len(v), list(v))]
    for strings, broken in MUTATIONS:
        w = rank3_check(*(ratfunc_from_str(F, s) for s in strings))
        items.append(_item(f"({', '.join(strings)}) fails {broken}",
                           [False, False],
                           [getattr(w, broken), w.overall]))
    return items


def run_howe_cubic() -> list[Item]:
    items = []
    for q, n in ((3, 2), (5, 2)):
        c = howe_cubic(q, n)
        items.append(_item(f"q={q} n={n} counts over F_q, F_q^3", [1, 1],
                           [count_points(c, 1), count_points(c, 3)]))
    return items


TARGETS: dict[str, Callable[[], list[Item]]] = {
    "admissible-g1": lambda: run_admissible(1),
    "admissible-g2": lambda: run_admissible(2),
    "admissible-g3": lambda: run_admissible(3),
    "admissible-g4": lambda: run_admissible(4),
    "admissible-g5": lambda: run_admissible(5),
    "genus1-table": run_genus1_table,
    "genus2-table": run_genus2_table,
    "elephant": run_elephant,
    "nonds-genus6": run_nonds_genus6,
    "hermitian": run_hermitian,
    "suzuki": run_suzuki,
    "ree": run_ree,
    "drinfeld-dl": run_drinfeld_dl,
    "carlitz-ex1": run_carlitz_ex1,
    "carlitz-ex2": run_carlitz_ex2,
    "basechange": run_basechange,
    "rank3-footnote": run_rank3_footnote,
    "howe-cubic": run_howe_cubic,
}


def run_target(name: str) -> list[Item]:
    if name not in TARGETS:
        raise InputError(f"unknown target {name!r}")
    return TARGETS[name]()
