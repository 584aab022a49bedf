"""Higher-rank Drinfeld actions and the rank-3 descent certificate.

A monic generator h = u_n tau^n + ... + u_1 tau + t over F_q(t) extends
the Carlitz recipe: [M] is the image of M under t -> h, torsion
polynomials divide [M] exactly, and base change along constant field
extensions turns a rank-n action over F_q into the Carlitz action over
F_{q^n}.  The rank-3 lemma over F_2 certifies that the curve cut out by
Phi_t gains no points from F_2 to F_4; its conditions are valuations of
the u_i at t and 1/t plus factorization constraints on Phi_t reduced at
the two remaining places of degree at most two.  The audit recomputes
the underlying place counts from Newton polygons and reduction
profiles, so a failing tuple names the offending place.

Only places of degree <= 2 of F_2(t) can carry a place of degree <= 2
of the cover, which is why auditing t, 1/t, t+1, t^2+t+1 is a complete
check for new F_4-points.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, NamedTuple, Sequence

from .carlitz import carlitz_phi, place_counts, unit_group
from .errors import DSError, InputError, SizeLimitError, ValidationError
from .fields import extension_field, factor_int, is_prime, mobius
from .fpoly import (
    INFINITY,
    FieldPoly,
    RatFunc,
    ord_at,
    poly_to_str,
    reduce_mod,
    residue_field,
)
from .skew import LinearizedPoly, XPoly

__all__ = [
    "BaseChangeResult",
    "DrinfeldAction",
    "Rank3Verdict",
    "basechange_phi",
    "constant_extension_places",
    "descent_zero_places",
    "drinfeld_action",
    "drinfeld_phi",
    "place_audit_rank3",
    "rank3_check",
]

_ACTION_CAP = 2**10


def _as_ratfunc(F, u) -> RatFunc:
    if isinstance(u, RatFunc):
        if u.field is not F:
            raise InputError("coefficient over the wrong base field")
        return u
    if isinstance(u, FieldPoly):
        if u.field is not F:
            raise InputError("coefficient over the wrong base field")
        return RatFunc(u)
    raise InputError(f"not a rational function: {u!r}")


class DrinfeldAction:
    """A Drinfeld module of rank n over F_q(t), given by its generator.

    u holds u_1 .. u_n with u_n nonzero; the skew generator is
    h = u_n tau^n + ... + u_1 tau + t.
    """

    __slots__ = ("field", "rank", "u", "h")

    def __init__(self, F, u: Sequence):
        us = tuple(_as_ratfunc(F, ui) for ui in u)
        if not us:
            raise InputError("rank must be at least 1")
        if not us[-1]:
            raise InputError("top coefficient u_n must be nonzero")
        object.__setattr__(self, "field", F)
        object.__setattr__(self, "rank", len(us))
        object.__setattr__(self, "u", us)
        h = LinearizedPoly(F.q, (RatFunc.x(F),) + us)
        object.__setattr__(self, "h", h)

    def __setattr__(self, *a):
        raise AttributeError("DrinfeldAction is immutable")

    def __repr__(self):
        return f"DrinfeldAction(q={self.field.q}, h={self.h})"


def drinfeld_action(D: DrinfeldAction, M: FieldPoly) -> LinearizedPoly:
    """[M] under t -> D.h, a skew polynomial of tau-degree rank * deg M."""
    F = D.field
    if M.field is not F:
        raise InputError("modulus over the wrong base field")
    if not M:
        raise InputError("modulus must be nonzero")
    size = F.q ** (D.rank * M.degree)
    if size > _ACTION_CAP:
        raise SizeLimitError(f"q^(n deg M) = {size} exceeds {_ACTION_CAP}")
    q = F.q
    out = LinearizedPoly.zero(q)
    p = LinearizedPoly.identity(q, RatFunc.const(F, 1))
    for c in M.coeffs:
        if c:
            out = out + p.scale(RatFunc.const(F, c))
        p = D.h * p
    assert out[0] == RatFunc(M)
    return out


def drinfeld_phi(D: DrinfeldAction, M: FieldPoly) -> XPoly:
    """Torsion polynomial Phi_M for D, by exact division of [M] by the
    Phi_Q over the proper monic divisors Q."""
    if not M.is_monic():
        raise InputError("torsion polynomial wants a monic modulus")
    memo: dict[tuple, XPoly] = {}
    return _phi(D, M, memo)


def _phi(D: DrinfeldAction, M: FieldPoly, memo: dict) -> XPoly:
    got = memo.get(M.coeffs)
    if got is not None:
        return got
    num = drinfeld_action(D, M).to_xpoly()
    for Q in _proper_monic_divisors(M):
        num, r = divmod(num, _phi(D, Q, memo))
        if r:
            raise DSError("torsion division left a remainder")
    memo[M.coeffs] = num
    return num


def _proper_monic_divisors(M: FieldPoly) -> list[FieldPoly]:
    out = [FieldPoly.one(M.field)]
    for pi, v in M.factor():
        out = [d * pi**e for d in out for e in range(v + 1)]
    out = [d for d in out if d.degree < M.degree]
    out.sort(key=lambda d: (d.degree, d.code()))
    return out


# ---------------------------------------------------------------------------
# the rank-3 lemma over F_2


class Rank3Verdict(NamedTuple):
    """Per-condition record for the rank-3 descent lemma over F_2."""

    eisenstein_u3: bool
    eisenstein_u2: bool
    eisenstein_u1: bool
    integral_infinity: bool
    integral_t_plus_1: bool
    integral_t_sq_t_1: bool
    quartic_gcd_one: bool
    quadratic_not_factor: bool
    overall: bool


def _rank3_places(F):
    t1 = FieldPoly(F, (1, 1))
    t2 = FieldPoly(F, (1, 1, 1))
    return t1, t2


def _reduce_xpoly(phi: XPoly, pi: FieldPoly) -> FieldPoly:
    """Phi with coefficients reduced at the place pi, as a dense poly
    over the residue field.  Every coefficient must be integral at pi."""
    E, theta = residue_field(pi)

    def red(c: RatFunc) -> int:
        dv = reduce_mod(c.den, E, theta)
        if dv == 0:
            raise InputError(f"coefficient has a pole at {pi}")
        return E.div(reduce_mod(c.num, E, theta), dv)

    return phi.to_dense(E, red)


def rank3_check(u1, u2, u3) -> Rank3Verdict:
    """Check the descent lemma's hypotheses for h = u3 tau^3 + u2 tau^2
    + u1 tau + t over F_2(t).

    Conditions: ord_t(u3) = 0 with ord_t(u2), ord_t(u1) >= 1; all u_i
    integral at 1/t, t+1 and t^2+t+1; gcd(x^4 + x, Phi_t mod t^2+t+1)
    trivial; x^2+x+1 does not divide Phi_t mod t+1.  When all hold, the
    curve of Phi_t has no new points over F_4.
    """
    if not (hasattr(u3, "field") and u3.field.q == 2):
        raise InputError("the rank-3 lemma is stated over F_2")
    F = u3.field
    us = tuple(_as_ratfunc(F, u) for u in (u1, u2, u3))
    u1, u2, u3 = us
    t = FieldPoly.x(F)
    t1, t2 = _rank3_places(F)

    e3 = ord_at(u3, t) == 0
    e2 = ord_at(u2, t) >= 1
    e1 = ord_at(u1, t) >= 1
    int_inf = all(ord_at(ui, INFINITY) >= 0 for ui in us)
    int_t1 = all(ord_at(ui, t1) >= 0 for ui in us)
    int_t2 = all(ord_at(ui, t2) >= 0 for ui in us)

    gcd_ok = False
    nodiv = False
    if u3:
        phi = drinfeld_phi(DrinfeldAction(F, us), t)
        if int_t2:
            E, _ = residue_field(t2)
            quartic = FieldPoly(E, (0, 1, 0, 0, 1))
            gcd_ok = quartic.gcd(_reduce_xpoly(phi, t2)).degree == 0
        if int_t1:
            quad = FieldPoly(F, (1, 1, 1))
            nodiv = bool(_reduce_xpoly(phi, t1) % quad)

    conds = (e3, e2, e1, int_inf, int_t1, int_t2, gcd_ok, nodiv)
    return Rank3Verdict(*conds, all(conds))


# ---------------------------------------------------------------------------
# place audit behind the lemma

# Hull segments come with a residual polynomial over the residue field;
# an irreducible residual factor of degree d and multiplicity 1 pins
# exactly one place of residue degree d, while multiplicity > 1 only
# bounds the degree below by d.


def _lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    pts = sorted(points)
    hull: list[tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            if (y1 - y0) * (p[0] - x0) >= (p[1] - y0) * (x1 - x0):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _residue_coeff(c: RatFunc, place, v: int) -> int:
    """Leading residue of c at a place where ord(c) = v, as a code in
    the residue field (F_q at infinity, F_q[t]/place otherwise)."""
    F = c.field
    if place == INFINITY:
        return F.div(c.num.lc(), c.den.lc())
    E, theta = residue_field(place)

    def strip(f: FieldPoly) -> FieldPoly:
        while True:
            q, r = divmod(f, place)
            if r:
                return f
            f = q

    return E.div(
        reduce_mod(strip(c.num), E, theta),
        reduce_mod(strip(c.den), E, theta),
    )


def _newton_entry(terms: Mapping[int, RatFunc], place) -> dict:
    """Newton polygon of sum c_i x^i at a place, with one residual
    polynomial per hull segment and the place degrees it certifies.

    Counts places of the cover by residue degree; new_degree_2 is the
    number of degree-2 places certain to exist, and conclusive means
    every residual factor was resolved (degree >= 3, or multiplicity 1).
    """
    F = next(iter(terms.values())).field
    pts = []
    for i, c in sorted(terms.items()):
        v = ord_at(c, place)
        if v != math.inf:
            pts.append((i, v))
    hull = _lower_hull(pts)
    vals = dict(pts)

    segments = []
    degree_1 = 0
    new_degree_2 = 0
    conclusive = True
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        slope = Fraction(y1 - y0, x1 - x0)
        width = x1 - x0
        b = slope.denominator
        rescoeffs = [0] * (width // b + 1)
        for i, v in pts:
            if x0 <= i <= x1 and (i - x0) % b == 0:
                if Fraction(v) == y0 + slope * (i - x0):
                    rescoeffs[(i - x0) // b] = _residue_coeff(
                        terms[i], place, v
                    )
        if place == INFINITY or place.degree == 1:
            E = F
        else:
            E, _ = residue_field(place)
        res = FieldPoly(E, rescoeffs).monic()
        factors = []
        for P, m in res.factor():
            factors.append((P.degree, m))
            if P.degree == 1 and m == 1:
                degree_1 += 1
            elif P.degree == 2 and m == 1:
                new_degree_2 += 1
            elif P.degree <= 2:
                conclusive = False
        segments.append(
            {
                "slope": str(slope),
                "root_valuation": str(-slope),
                "width": width,
                "ramification": b,
                "residual": poly_to_str(res, "y"),
                "residual_factors": factors,
            }
        )

    return {
        "points": [[i, v] for i, v in pts],
        "segments": segments,
        "degree_1_places": degree_1,
        "new_degree_2_places": new_degree_2,
        "conclusive": conclusive,
    }


def _profile_entry(phi: XPoly, pi: FieldPoly) -> dict:
    """Factorization profile of Phi reduced at pi; inseparable
    reductions are reported and left inconclusive."""
    red = _reduce_xpoly(phi, pi)
    sep = red.gcd(red.derivative()).degree == 0
    entry: dict = {"reduction": poly_to_str(red, "x"), "separable": sep}
    if not sep:
        entry.update(
            {"profile": None, "new_degree_2_places": 0, "conclusive": False}
        )
        return entry
    profile: dict[int, int] = {}
    for P, m in red.factor():
        profile[P.degree] = profile.get(P.degree, 0) + m
    # place degree = deg(pi) * factor degree; degree-1 places are
    # rational already, only degree-2 places are new over F_4
    want = 2 // pi.degree
    entry.update(
        {
            "profile": sorted(profile.items()),
            "degree_1_places": profile.get(1, 0) if pi.degree == 1 else 0,
            "new_degree_2_places": profile.get(want, 0) if want else 0,
            "conclusive": True,
        }
    )
    return entry


def place_audit_rank3(u1, u2, u3) -> dict:
    """Recount the places of degree <= 2 on the curve of Phi_t.

    Newton polygons at t and 1/t plus reduction profiles at t+1 and
    t^2+t+1 cover every place of F_2(t) of degree <= 2, so together
    they decide whether the curve gains points from F_2 to F_4.  The
    verdict is None when some place stays inconclusive (inseparable
    reduction, or an unresolved residual factor).
    """
    if not (hasattr(u3, "field") and u3.field.q == 2):
        raise InputError("the rank-3 audit is stated over F_2")
    F = u3.field
    us = tuple(_as_ratfunc(F, u) for u in (u1, u2, u3))
    u1, u2, u3 = us
    t = FieldPoly.x(F)
    t1, t2 = _rank3_places(F)
    if not u3 or ord_at(u3, t) != 0:
        raise InputError("audit needs ord_t(u3) = 0")
    for ui in us:
        for place in (INFINITY, t1, t2):
            if ord_at(ui, place) < 0:
                raise InputError(f"audit needs u integral at {place}")

    phi = drinfeld_phi(DrinfeldAction(F, us), t)
    terms = phi.terms

    at_t = _newton_entry(terms, t)
    at_t["totally_ramified"] = [s["ramification"] for s in at_t[
        "segments"
    ]] == [phi.degree]
    at_inf = _newton_entry(terms, INFINITY)
    at_t1 = _profile_entry(phi, t1)
    at_t2 = _profile_entry(phi, t2)

    entries = {"t": at_t, "1/t": at_inf, "t+1": at_t1, "t^2+t+1": at_t2}
    new2 = sum(e["new_degree_2_places"] for e in entries.values())
    conclusive = all(e["conclusive"] for e in entries.values())
    if new2 > 0:
        ds = False
    elif conclusive:
        ds = True
    else:
        ds = None

    report = dict(entries)
    report["new_degree_2_places"] = new2
    report["conclusive"] = conclusive
    report["ds_for_F4_over_F2"] = ds
    return report


# ---------------------------------------------------------------------------
# base change and descent


class BaseChangeResult(NamedTuple):
    """Phi_M computed two ways, with the comparison spelled out."""

    phi: XPoly
    routes_equal: bool
    coefficients_in_base: bool


def basechange_phi(q: int, n: int, M: FieldPoly) -> BaseChangeResult:
    """Phi_M for the rank-n action with u = (0, .., 0, 1) over F_q,
    certified against the Carlitz torsion polynomial over F_{q^n}.

    Requires the factorization pattern of M to survive the constant
    field extension; a prime that splits is reported with a witness.
    """
    F = M.field
    if F.q != q:
        raise InputError(f"modulus is over F_{F.q}, not F_{q}")
    if n < 1:
        raise InputError("extension degree must be positive")
    if not M.is_monic():
        raise InputError("base change wants a monic modulus")
    E = extension_field(F, n)
    for pi, _ in M.factor():
        pi_e = FieldPoly(E, pi.coeffs)
        if not pi_e.is_irreducible():
            w = pi_e.factor()[0][0]
            raise InputError(
                f"factorization changes over F_{E.q}: "
                f"{pi} acquires the factor {w}"
            )

    D = DrinfeldAction(F, (RatFunc.const(F, 0),) * (n - 1) + (RatFunc.const(F, 1),))
    route_a = drinfeld_phi(D, M)
    route_b = carlitz_phi(FieldPoly(E, M.coeffs))

    if set(route_a.terms) != set(route_b.terms):
        raise DSError("base change routes disagree on support")
    coeffs: dict[int, FieldPoly] = {}
    for e, cb in route_b.terms.items():
        ca = route_a.terms[e]
        if not ca.is_poly():
            raise DSError("rank-n torsion coefficient is not polynomial")
        if any(c >= q for c in cb.coeffs):
            raise DSError("base change left a coefficient outside F_q[t]")
        if ca.num.coeffs != cb.coeffs:
            raise DSError(f"base change routes disagree at x^{e}")
        coeffs[e] = FieldPoly(F, cb.coeffs)
    return BaseChangeResult(XPoly(coeffs), True, True)


def descent_zero_places(q: int, ell: int, M: FieldPoly) -> set[int]:
    """Indices k with a_k = 0 on the rank-1 curve X_{M,1} over F_q,
    certified through the constant field extension of degree ell.

    Needs ell prime, deg M > ell, and M irreducible over F_{q^ell}.
    Computes the place counts of X_{M,ell} (the Carlitz cover over
    F_{q^ell}) and descends each vanishing a_k with ell | k to a_{ell k}.
    """
    F = M.field
    if F.q != q:
        raise InputError(f"modulus is over F_{F.q}, not F_{q}")
    if not is_prime(ell):
        raise InputError("descent needs a prime extension degree")
    if M.degree <= ell:
        raise InputError("descent needs deg M > ell")
    E = extension_field(F, ell)
    M_e = FieldPoly(E, M.coeffs)
    if not M_e.is_irreducible():
        raise InputError(f"modulus must stay irreducible over F_{E.q}")
    counts = place_counts(unit_group(M_e), M.degree)
    return {
        ell * k
        for k in range(2, M.degree + 1)
        if k % ell == 0 and counts[k - 1] == 0
    }


def constant_extension_places(a1: Mapping[int, int], n: int, k: int) -> int:
    """a_k of X_{M,n} from the degree-1 counts a_1 of X_{M,j}.

    The X_{M,j} must all be constant field extensions of one fixed
    curve (the same torsion equation read over F_{q^j}), so that
    a_1(X_{M,j}) is its point count over F_{q^j}.  Moebius inversion
    over the divisors of k then gives k a_k(X_{M,n}) =
    sum_{d | k} mu(d) a_1(X_{M, nk/d}).  A missing a1 entry or a
    non-integral result is an error.
    """
    if n < 1 or k < 1:
        raise InputError("extension degrees must be positive")
    total = 0
    for d in _divisors(k):
        m = mobius(d)
        if m == 0:
            continue
        j = n * k // d
        if j not in a1:
            raise InputError(f"missing a_1 value at extension degree {j}")
        total += m * a1[j]
    if total % k:
        raise ValidationError("non-integral place count from the given a_1")
    return total // k


def _divisors(k: int) -> list[int]:
    out = [1]
    for p, e in factor_int(k).items():
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)

