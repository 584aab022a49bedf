"""Zeta data for curves over finite fields.

A curve /F_q of genus g is carried around as the numerator P(t) of its
zeta function, normalized with P(0) = 1 and degree 2g.  Conversions:

    counts   N_m = #X(F_{q^m})          Newton identities, S_m = 1+q^m-N_m
    places   a_d = #closed points deg d Moebius inversion of N_m = sum d*a_d
    real     h(x) monic deg g           P(t) = t^g h((1+q t^2)/t)

All of it is exact integer/Fraction arithmetic; the Weil-window membership
test is a Sturm count against nested rational enclosures of 2*sqrt(q), so
no square root is ever floated.
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction

from .errors import InputError, NotACurveError
from .exactpoly import (
    ExactPoly,
    count_roots_halfopen,
    sturm_chain,
    variations,
)
from .fields import mobius, prime_powers

__all__ = [
    "ZetaData",
    "places_from_points",
    "points_from_places",
    "frobenius_from_counts",
    "extend_counts",
    "real_weil_from_frobenius",
    "frobenius_from_real_weil",
    "ds_check",
    "is_weil_valid",
    "hws_interval",
    "admissible_pairs",
    "explicit_formula_filter",
]


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def places_from_points(counts: list[int]) -> list[int]:
    """a_1..a_D from N_1..N_D; raises NotACurveError on the first bad index."""
    out = []
    for d in range(1, len(counts) + 1):
        s = sum(mobius(e) * counts[d // e - 1] for e in _divisors(d))
        if s % d:
            raise NotACurveError(f"degree-{d} place count is not integral", index=d)
        a = s // d
        if a < 0:
            raise NotACurveError(f"degree-{d} place count is negative", index=d)
        out.append(a)
    return out


def points_from_places(places: list[int]) -> list[int]:
    """N_1..N_D from a_1..a_D via N_m = sum_{d|m} d*a_d."""
    D = len(places)
    return [sum(d * places[d - 1] for d in _divisors(m)) for m in range(1, D + 1)]


# ---------------------------------------------------------------------------
# the main container


class ZetaData:
    """Numerator P(t) of the zeta function, with q and g."""

    __slots__ = ("q", "g", "P")

    def __init__(self, q: int, g: int, P):
        P = tuple(int(c) for c in P)
        if len(P) != 2 * g + 1:
            raise InputError(f"P must have degree exactly {2 * g}")
        if P[0] != 1:
            raise InputError("P(0) must be 1")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "P", P)
        for j in range(1, g + 1):
            if P[g + j] != q**j * P[g - j]:
                raise NotACurveError(
                    f"functional equation fails at coefficient {g + j}", index=g + j
                )

    def __setattr__(self, *a):
        raise AttributeError("ZetaData is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, ZetaData)
            and (self.q, self.g, self.P) == (other.q, other.g, other.P)
        )

    def __hash__(self):
        return hash((self.q, self.g, self.P))

    def __repr__(self):
        from .exactpoly import int_poly_str

        return f"ZetaData(q={self.q}, g={self.g}, P={int_poly_str(self.P)})"

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_counts(cls, q: int, g: int, counts) -> "ZetaData":
        """Build from N_1..N_g (extra counts beyond g are cross-checked)."""
        counts = [int(n) for n in counts]
        if len(counts) < g:
            raise InputError(f"need at least {g} point counts")
        S = [0] + [1 + q**m - counts[m - 1] for m in range(1, len(counts) + 1)]
        A = [1] + [0] * (2 * g)
        for n in range(1, g + 1):
            acc = 0
            for k in range(1, n + 1):
                acc += S[k] * A[n - k]
            if acc % n:
                raise NotACurveError(f"Newton identity gives non-integer A_{n}", index=n)
            A[n] = -acc // n
        for j in range(1, g + 1):
            A[g + j] = q**j * A[g - j]
        z = cls(q, g, A)
        for m in range(g + 1, len(counts) + 1):
            if z.count(m) != counts[m - 1]:
                raise NotACurveError(
                    f"supplied N_{m} conflicts with the functional equation", index=m
                )
        return z

    @classmethod
    def from_places(cls, q: int, g: int, places) -> "ZetaData":
        places = [int(a) for a in places]
        for d, a in enumerate(places, start=1):
            if a < 0:
                raise NotACurveError(f"negative a_{d}", index=d)
        return cls.from_counts(q, g, points_from_places(places))

    @classmethod
    def from_real_weil(cls, q: int, h) -> "ZetaData":
        """h = ascending integer coefficients of the monic real Weil polynomial."""
        h = [int(c) for c in h]
        if not h or h[-1] != 1:
            raise InputError("real Weil polynomial must be monic")
        g = len(h) - 1
        A = [0] * (2 * g + 1)
        for j in range(g + 1):
            hj = h[j]
            if hj == 0:
                continue
            for r in range(j + 1):
                A[g - j + 2 * r] += hj * math.comb(j, r) * q**r
        return cls(q, g, A)

    @classmethod
    def from_dict(cls, d: dict) -> "ZetaData":
        return cls(int(d["q"]), int(d["g"]), [int(c) for c in d["P"]])

    def to_dict(self) -> dict:
        return {"q": self.q, "g": self.g, "P": list(self.P)}

    # -- conversions ---------------------------------------------------------

    def power_sums(self, mmax: int) -> list[int]:
        """S_1..S_mmax where S_m = sum of m-th powers of the inverse roots."""
        A = list(self.P)
        S = [0] * (mmax + 1)
        for n in range(1, mmax + 1):
            acc = n * A[n] if n < len(A) else 0
            for m in range(1, n):
                if n - m < len(A):
                    acc += S[m] * A[n - m]
            S[n] = -acc
        return S[1:]

    def count(self, m: int) -> int:
        return self.counts_list(m)[m - 1]

    def counts_list(self, mmax: int) -> list[int]:
        S = self.power_sums(mmax)
        return [1 + self.q**m - S[m - 1] for m in range(1, mmax + 1)]

    def places(self, dmax: int) -> list[int]:
        return places_from_points(self.counts_list(dmax))

    def real_weil(self) -> list[int]:
        """Ascending coefficients of the monic real Weil polynomial h."""
        q, g, A = self.q, self.g, self.P
        H = [0] * (g + 1)
        for n in range(g + 1):
            acc = A[n]
            for k in range(n % 2, n, 2):
                acc -= H[k] * math.comb(g - k, (n - k) // 2) * q ** ((n - k) // 2)
            H[n] = acc
        h = [0] * (g + 1)
        for k in range(g + 1):
            h[g - k] = H[k]
        return h

    def lpoly_monic(self) -> list[int]:
        """Ascending coefficients of t^{2g} P(1/t), the monic companion form."""
        return list(reversed(self.P))

    def base_extend(self, e: int) -> "ZetaData":
        if e < 1:
            raise InputError("extension degree must be >= 1")
        counts = self.counts_list(e * self.g)
        return ZetaData.from_counts(self.q**e, self.g, [counts[e * j - 1] for j in range(1, self.g + 1)])

    # -- predicates ----------------------------------------------------------

    def is_weil(self) -> bool:
        return is_weil_valid(self.real_weil(), self.q)

    def ds_check(self, m: int) -> bool:
        """No closed point of degree d for any divisor d >= 2 of m.

        This is the field-growth criterion: X(F_{q^m}) = X(F_q) as sets
        exactly when every new point would have degree dividing m.
        """
        if m < 1:
            raise InputError("m must be >= 1")
        a = self.places(m)
        return all(a[d - 1] == 0 for d in _divisors(m) if d >= 2)


# ---------------------------------------------------------------------------
# the operation surface; thin names over ZetaData


def frobenius_from_counts(q: int, g: int, counts) -> ZetaData:
    """ZetaData from N_1..N_g (or more), refusing count sequences that no
    curve can have: Newton integrality, the functional equation against any
    extra counts, nonnegative place counts, and the real-root window."""
    z = ZetaData.from_counts(q, g, counts)
    dmax = max(g, len(list(counts)))
    try:
        z.places(dmax)
    except NotACurveError as e:
        raise NotACurveError(f"no curve with these counts: {e}", index=e.index) from e
    if not z.is_weil():
        raise NotACurveError(
            "no curve with these counts: real Weil polynomial has a root "
            "outside [-2*sqrt(q), 2*sqrt(q)]"
        )
    return z


def extend_counts(z: ZetaData, m: int) -> list[int]:
    """N_1..N_m over the extension tower of F_q."""
    return z.counts_list(m)


def real_weil_from_frobenius(z: ZetaData) -> list[int]:
    return z.real_weil()


def frobenius_from_real_weil(q: int, h) -> ZetaData:
    return ZetaData.from_real_weil(q, h)


def ds_check(z: ZetaData, m: int) -> bool:
    """Whether X(F_{q^m}) = X(F_q) is forced by the zeta data."""
    return z.ds_check(m)


# ---------------------------------------------------------------------------
# Weil window membership, exact


def _strip_edge_roots(s: ExactPoly, q: int) -> tuple[ExactPoly, bool]:
    """Remove roots at +-2*sqrt(q); second value reports q being a square."""
    r = math.isqrt(q)
    if r * r == q:
        x = ExactPoly.x()
        for root in (2 * r, -2 * r):
            while s.degree > 0 and s(root) == 0:
                s = s / (x - root)
        return s, True
    edge = ExactPoly((-4 * q, 0, 1))
    while s.degree >= 2:
        qq, rr = divmod(s, edge)
        if rr:
            break
        s = qq
    return s, False


def is_weil_valid(h, q: int) -> bool:
    """Whether every root of the monic integer polynomial h is real and lies
    in [-2*sqrt(q), 2*sqrt(q)].

    Sturm counts against nested rational enclosures of the window; exact
    throughout, endpoints included (ties accept).
    """
    if q < 2:
        raise InputError("q must be >= 2")
    hp = ExactPoly(h)
    if hp.degree < 0:
        raise InputError("zero polynomial")
    if hp.lc() != 1:
        raise InputError("polynomial must be monic")
    if hp.degree == 0:
        return True
    s = hp.squarefree_part()
    s, square = _strip_edge_roots(s, q)
    d = s.degree
    if d <= 0:
        return True
    if square:
        r = 2 * math.isqrt(q)
        chain = sturm_chain(s)
        return count_roots_halfopen(chain, Fraction(-r), Fraction(r)) == d

    D = 1
    x = ExactPoly.x()
    while True:
        D *= 2
        ci = Fraction(math.isqrt(4 * q * D * D), D)
        co = ci + Fraction(1, D)
        moved = False
        for r in (ci, -ci):
            while s.degree > 0 and s(r) == 0:
                s = s / (x - r)  # rational root inside the window
                moved = True
        if moved:
            d = s.degree
            if d <= 0:
                return True
        if s(co) == 0 or s(-co) == 0:
            return False  # rational root strictly outside the window
        chain = sturm_chain(s)
        n_in = variations(chain, -ci) - variations(chain, ci)
        if n_in == d:
            return True
        n_out = variations(chain, -co) - variations(chain, co)
        if n_out < d:
            return False


# ---------------------------------------------------------------------------
# admissibility


def hws_interval(q: int, g: int) -> tuple[int, int]:
    """Integer interval of admissible point counts N_1 at genus g."""
    w = g * math.isqrt(4 * q)
    return max(0, 1 + q - w), 1 + q + w


def admissible_pairs(g: int, mmax: int = 64) -> list[tuple[int, int]]:
    """All (q, m), m >= 2, where a genus-g curve /F_q could satisfy
    #X(F_{q^m}) = #X(F_q); sorted by (q, m).

    The per-q loop stops once the envelope q^m - 2g*sqrt(q^m) provably
    exceeds the upper Weil bound over F_q, which is sound because that
    envelope increases in m from sqrt(q^m) >= g onward; admissibility
    itself is not monotone in m, so no early exit on a single failure.
    """
    if g < 1:
        raise InputError("genus must be >= 1")
    out = []
    qcap = (2 * g + 3) ** 2
    for q, _p, _k in prime_powers(qcap):
        upper = 1 + q + g * math.isqrt(4 * q)
        m = 2
        while m <= mmax:
            Q = q**m
            lower = max(0, 1 + Q - g * math.isqrt(4 * Q))
            if lower <= upper:
                out.append((q, m))
            if math.isqrt(Q) >= g and Q - 2 * g * (math.isqrt(Q) + 1) > upper:
                break
            m += 1
    out.sort()
    return out


# ---------------------------------------------------------------------------
# explicit-formula filter


def _sign_u_v_sqrtq(u: Fraction, v: Fraction, q: int) -> int:
    """Sign of u + v*sqrt(q), exact."""
    r = math.isqrt(q)
    if r * r == q:
        w = u + v * r
        return (w > 0) - (w < 0)
    if v == 0:
        return (u > 0) - (u < 0)
    if u == 0:
        return (v > 0) - (v < 0)
    if u > 0 and v > 0:
        return 1
    if u < 0 and v < 0:
        return -1
    # opposite signs: compare u^2 with v^2 q; sign follows the larger side
    uu, vv = u * u, v * v * q
    if uu == vv:
        return 0
    big_u = uu > vv
    return 1 if (u > 0) == big_u else -1


def explicit_formula_filter(q, g, places, c, grid: int = 4096, tol: float = 1e-9) -> bool:
    """Test the trigonometric point-count inequality for a place vector.

    places = [a_1, a_2, ...]; c = test-function coefficients c_1..c_L as
    Fractions.  The nonnegativity of F(t) = 1 + 2 sum c_n cos(nt) is only
    grid-checked (heuristic); a warning is emitted if it looks violated.
    The inequality itself is decided exactly in Q[sqrt(q)].
    """
    c = [Fraction(x) for x in c]
    bad = min(
        1 + 2 * sum(float(cn) * math.cos((n + 1) * 2 * math.pi * j / grid) for n, cn in enumerate(c))
        for j in range(grid)
    )
    if bad < -tol:
        warnings.warn(
            f"test function dips to {bad:.3g} on the check grid; filter unsound for this c",
            stacklevel=2,
        )

    def q_half_pow(n: int) -> tuple[Fraction, Fraction]:
        # q^(n/2) as u + v sqrt(q), n may be negative
        if n % 2 == 0:
            return (Fraction(q) ** (n // 2), Fraction(0))
        return (Fraction(0), Fraction(q) ** ((n - 1) // 2))

    L = len(c)

    def psi(d: int) -> tuple[Fraction, Fraction]:
        u = v = Fraction(0)
        for n in range(1, L + 1):
            if n % d == 0:
                du, dv = q_half_pow(-n)
                u += c[n - 1] * du
                v += c[n - 1] * dv
        return u, v

    a1 = places[0] if places else 0
    ru = Fraction(g)
    rv = Fraction(0)
    for n in range(1, L + 1):
        du, dv = q_half_pow(n)
        ru += c[n - 1] * du
        rv += c[n - 1] * dv
    p1u, p1v = psi(1)
    ru += (1 - a1) * p1u
    rv += (1 - a1) * p1v
    lu = lv = Fraction(0)
    for d in range(2, len(places) + 1):
        ad = places[d - 1]
        if ad == 0:
            continue
        pu, pv = psi(d)
        lu += d * ad * pu
        lv += d * ad * pv
    return _sign_u_v_sqrtq(ru - lu, rv - lv, q) >= 0
