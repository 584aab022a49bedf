"""Tree search for real Weil polynomial candidates.

A candidate is a vector [a_1..a_g] of hoped-for place counts.  Fixing
a_1..a_i pins the top coefficients H_0..H_i of the monic degree-g real
Weil polynomial h, hence all of h^(g-i) except its constant term
t(a_i) = (g-i)! H_i.  Rolle then boxes the constant term between the
critical values of the known part, which is the pruning bound; the
actual accept/reject decision is the exact root-window test on h^(g-i)
so no candidate is ever lost to interval slack.

Search order is depth first with a_i ascending, which makes the output
stream lexicographic in [a_1..a_g] and therefore identical across runs
and across worker counts.
"""

from __future__ import annotations

import math
import multiprocessing
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional

from .errors import InputError
from .exactpoly import ExactPoly, eval_interval, isolate_real_roots, refine_enclosure
from .zeta import ZetaData, hws_interval, is_weil_valid

__all__ = [
    "Candidate",
    "PartialCandidate",
    "h_coefficients",
    "prune_range",
    "accept",
    "enumerate",
]

_WIDTH = Fraction(1, 2**32)


class Candidate(NamedTuple):
    a: tuple
    h: tuple
    z: ZetaData


def _series_coeffs(q: int, prefix, upto: int) -> list[int]:
    """A_0..A_upto of (1-t)(1-qt) * prod_d (1-t^d)^{-a_d}."""
    A = [0] * (upto + 1)
    A[0] = 1
    if upto >= 1:
        A[1] = -(1 + q)
    if upto >= 2:
        A[2] = q
    for d in range(1, len(prefix) + 1):
        a = prefix[d - 1]
        if a == 0:
            continue
        B, A = A, [0] * (upto + 1)
        j = 0
        while d * j <= upto:
            c = math.comb(a - 1 + j, j)
            for k in range(upto - d * j + 1):
                A[k + d * j] += c * B[k]
            j += 1
    return A


def _solve_H(q: int, g: int, A: list[int]) -> list[int]:
    """H_0..H_i from A_0..A_i via A_n = sum H_k C(g-k,(n-k)/2) q^((n-k)/2)."""
    H = [1]
    for n in range(1, len(A)):
        acc = A[n]
        for k in range(n % 2, n, 2):
            acc -= H[k] * math.comb(g - k, (n - k) // 2) * q ** ((n - k) // 2)
        H.append(acc)
    return H


def h_coefficients(q: int, g: int, prefix) -> tuple[tuple, int]:
    """(H_1..H_i, slope dH_i/da_i) for the prefix a_1..a_i, all exact.

    The slope is measured by bumping a_i by one, as a cross-check on the
    closed form; it comes out 1 for every admissible input.
    """
    prefix = [int(a) for a in prefix]
    i = len(prefix)
    if i < 1 or i > g:
        raise InputError("prefix length must be between 1 and g")
    H = _solve_H(q, g, _series_coeffs(q, prefix, i))
    bumped = prefix[:-1] + [prefix[-1] + 1]
    Hb = _solve_H(q, g, _series_coeffs(q, bumped, i))
    return tuple(H[1:]), Hb[i] - H[i]


class PartialCandidate:
    """Search node holding a_1..a_i and the coefficients H_0..H_i."""

    __slots__ = ("q", "g", "prefix", "H")

    def __init__(self, q: int, g: int, prefix=()):
        if g < 1:
            raise InputError("genus must be >= 1")
        self.q = q
        self.g = g
        self.prefix = tuple(int(a) for a in prefix)
        if len(self.prefix) > g:
            raise InputError("prefix longer than the genus")
        A = _series_coeffs(q, self.prefix, len(self.prefix))
        self.H = tuple(_solve_H(q, g, A))

    def __repr__(self):
        return f"PartialCandidate(q={self.q}, g={self.g}, a={list(self.prefix)})"

    def child(self, a: int) -> "PartialCandidate":
        return PartialCandidate(self.q, self.g, self.prefix + (a,))

    def depth(self) -> int:
        return len(self.prefix)

    def known_part(self) -> ExactPoly:
        """T_i(x) for i = depth+1: h^(g-i) minus its constant term."""
        g, i = self.g, self.depth() + 1
        coeffs = [Fraction(0)] * (i + 1)
        for n in range(len(self.H)):
            coeffs[i - n] = Fraction(self.H[n] * math.perm(g - n, g - i))
        return ExactPoly(coeffs)

    def real_weil(self) -> list[int]:
        if self.depth() != self.g:
            raise InputError("candidate is not full length")
        h = [0] * (self.g + 1)
        for k in range(self.g + 1):
            h[self.g - k] = self.H[k]
        return h


def _two_sqrt_q(q: int) -> tuple[Fraction, Fraction]:
    n = 4 * q
    s = math.isqrt(n)
    if s * s == n:
        return Fraction(s), Fraction(s)
    return refine_enclosure(ExactPoly((-n, 0, 1)), Fraction(s), Fraction(s + 1), _WIDTH)


def prune_range(node: PartialCandidate) -> range:
    """Sound integer range for the next entry a_i.

    Upper bound = min of the Rolle box on t(a_i) (from outer enclosures of
    the critical values, so slack only ever widens the range) and the Weil
    count bound on N_i.  Degenerate derivatives (repeated or complex
    critical points) fall back to the sentinel evaluations alone.
    """
    q, g = node.q, node.g
    i = node.depth() + 1
    if i > g:
        raise InputError("node is already full length")

    used = sum(d * node.prefix[d - 1] for d in range(1, i) if i % d == 0)
    cap = 1 + q**i + g * math.isqrt(4 * q**i)
    amax = (cap - used) // i

    T = node.known_part()
    roots = isolate_real_roots(T.derivative(), _WIDTH)
    lo2, hi2 = _two_sqrt_q(q)
    spots = []  # (j, interval) for alpha_0..alpha_i
    if len(roots) == i - 1:
        spots.append((0, (-hi2, -lo2)))
        for j in range(len(roots)):
            spots.append((j + 1, roots[j]))
        spots.append((i, (lo2, hi2)))
    else:
        spots = [(0, (-hi2, -lo2)), (i, (lo2, hi2))]

    bound: Optional[Fraction] = None
    for j, (a, b) in spots:
        if (i - j) % 2 == 1:
            elo, _ehi = eval_interval(T, a, b)
            cand = -elo
            if bound is None or cand < bound:
                bound = cand
    if bound is not None:
        H0, slope = h_coefficients(q, g, node.prefix + (0,))
        if slope <= 0:
            raise InputError("nonpositive slope in H_i(a_i)")
        top = Fraction(bound, math.factorial(g - i)) - H0[i - 1]
        amax = min(amax, math.floor(top / slope))
    return range(0, max(amax, -1) + 1)


def accept(node: PartialCandidate, a_i: int) -> bool:
    """Exact decision: does appending a_i keep all roots of h^(g-i) real
    and inside the closed window [-2 sqrt(q), 2 sqrt(q)]?"""
    q, g = node.q, node.g
    i = node.depth() + 1
    child = node.child(a_i)
    T = node.known_part()
    t = Fraction(child.H[i] * math.factorial(g - i))
    poly = T + ExactPoly((t,))
    lead = Fraction(math.perm(g, g - i))
    coeffs = [c / lead for c in poly.coeffs]
    return is_weil_valid(coeffs, q)


def _finish(q: int, g: int, prefix, ds_m) -> Optional[tuple]:
    node = PartialCandidate(q, g, prefix)
    h = node.real_weil()
    z = ZetaData.from_real_weil(q, h)
    if ds_m is not None and not z.ds_check(ds_m):
        return None
    return (tuple(prefix), tuple(h), z.P)


def _dfs(q, g, prefix, zeros, ds_m, prune, out):
    i = len(prefix) + 1
    node = PartialCandidate(q, g, prefix)
    if i in zeros:
        values = [0]
    elif prune:
        values = prune_range(node)
    else:
        used = sum(d * prefix[d - 1] for d in range(1, i) if i % d == 0)
        cap = 1 + q**i + g * math.isqrt(4 * q**i)
        values = range(0, max((cap - used) // i, -1) + 1)
    for a in values:
        if not accept(node, a):
            continue
        nxt = prefix + (a,)
        if i == g:
            full = _finish(q, g, nxt, ds_m)
            if full is not None:
                out.append(full)
        else:
            _dfs(q, g, nxt, zeros, ds_m, prune, out)


def _seed_values(q, g, a1, zeros):
    if a1 is not None:
        return [int(a1)]
    if 1 in zeros:
        return [0]
    lo, hi = hws_interval(q, g)
    return list(range(lo, hi + 1))


def _run_seeds(args):
    q, g, seeds, zeros, ds_m, prune = args
    out: list[tuple] = []
    root = PartialCandidate(q, g, ())
    for a1 in seeds:
        if not accept(root, a1):
            continue
        if g == 1:
            full = _finish(q, g, (a1,), ds_m)
            if full is not None:
                out.append(full)
        else:
            _dfs(q, g, (a1,), zeros, ds_m, prune, out)
    return out


def enumerate(
    q: int,
    g: int,
    a1: Optional[int] = None,
    zeros=(),
    ds_m: Optional[int] = None,
    jobs: int = 1,
    prune: bool = True,
) -> Iterator[Candidate]:
    """All full candidates (a, h, P) at (q, g), lexicographic in a.

    zeros forces a_d = 0 at the listed depths; ds_m additionally forces
    the zero set {d : d | ds_m, 1 < d <= g} and post-filters the finished
    zeta data with ds_check so divisors beyond g are honored too.  jobs
    splits the depth-1 seeds across processes; the merge keeps seed
    order, so output is independent of jobs.  prune=False drops the
    Rolle box (kept for the equivalence check; much slower).
    """
    if g < 1 or g > 8:
        raise InputError("genus out of range (1..8)")
    zeros = set(int(d) for d in zeros)
    if ds_m is not None:
        if ds_m < 2:
            raise InputError("ds modulus must be >= 2")
        zeros |= {d for d in range(2, g + 1) if ds_m % d == 0}
    seeds = _seed_values(q, g, a1, zeros)

    if jobs <= 1 or len(seeds) <= 1:
        batches = [_run_seeds((q, g, seeds, zeros, ds_m, prune))]
    else:
        jobs = min(jobs, len(seeds))
        chunks = [seeds[k::jobs] for k in range(jobs)]
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(
                _run_seeds, [(q, g, c, zeros, ds_m, prune) for c in chunks]
            )
        merged = [cand for part in parts for cand in part]
        merged.sort(key=lambda it: it[0])
        batches = [merged]
    for batch in batches:
        for a, h, P in batch:
            yield Candidate(a, h, ZetaData(q, g, P))
