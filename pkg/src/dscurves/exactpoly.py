"""Dense polynomials over Q with exact real-root machinery.

Everything here is Fraction-exact: Sturm chains, root counting in boxes
with rational endpoints, isolation of distinct real roots into disjoint
rational enclosures, and interval evaluation.  Float arithmetic never
decides anything; the numeric libraries only show up in tests as
adversarial cross-checks.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InputError

__all__ = [
    "ExactPoly",
    "sturm_chain",
    "variations",
    "count_roots_halfopen",
    "isolate_real_roots",
    "refine_enclosure",
    "eval_interval",
    "cyclotomic_int_coeffs",
    "exactpoly_from_str",
    "int_poly_str",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise InputError(f"not an exact number: {x!r}")


class ExactPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("ExactPoly is immutable")

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactPoly.const(other)
        return isinstance(other, ExactPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ExactPoly({int_poly_str(self.coeffs, 'x')!r})"

    def _coerce(self, other):
        if isinstance(other, ExactPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        return ExactPoly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (o.coeffs[i] if i < len(o.coeffs) else 0)
                for i in range(n)
            ]
        )

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self or not o:
            return ExactPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        out[i + j] += a * b
        return ExactPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        q, r = divmod(self, o)
        if r:
            raise InputError("inexact polynomial division")
        return q

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dv = o.degree
        inv = 1 / o.lc()
        q = [Fraction(0)] * max(0, len(r) - dv)
        while len(r) - 1 >= dv and r:
            c = r[-1] * inv
            k = len(r) - 1 - dv
            q[k] = c
            for i, b in enumerate(o.coeffs):
                if b:
                    r[k + i] -= c * b
            while r and r[-1] == 0:
                r.pop()
        return ExactPoly(q), ExactPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise InputError("negative exponent")
        r = ExactPoly.const(1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __call__(self, x):
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return ExactPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if not self or self.lc() == 1:
            return self
        inv = 1 / self.lc()
        return ExactPoly([c * inv for c in self.coeffs])

    def gcd(self, other):
        a, b = self, self._coerce(other)
        while b:
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self):
        if self.degree <= 0:
            return self.monic()
        return (self / self.gcd(self.derivative())).monic()

    def reverse(self):
        """Coefficients reversed; t^deg * p(1/t)."""
        return ExactPoly(tuple(reversed(self.coeffs)))

    def int_coeffs(self) -> list[int]:
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise InputError("non-integer coefficient")
            out.append(c.numerator)
        return out


# ---------------------------------------------------------------------------
# Sturm machinery


def sturm_chain(p: ExactPoly) -> list[ExactPoly]:
    chain = [p, p.derivative()]
    while chain[-1]:
        r = chain[-2] % chain[-1]
        if not r:
            break
        chain.append(-r)
    return [c for c in chain if c]


def variations(chain, x) -> int:
    x = _frac(x)
    signs = []
    for p in chain:
        v = p(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_halfopen(chain, a, b) -> int:
    """Distinct real roots of chain[0] in (a, b]; needs chain[0](a), (b) != 0."""
    p = chain[0]
    if p(a) == 0 or p(b) == 0:
        raise InputError("endpoint is a root")
    return variations(chain, a) - variations(chain, b)


def cauchy_bound(p: ExactPoly) -> Fraction:
    if p.degree < 1:
        return Fraction(1)
    m = max(abs(c) for c in p.coeffs[:-1])
    return 1 + m / abs(p.lc())


def _nonroot_split(p: ExactPoly, a: Fraction, b: Fraction) -> Fraction:
    # a split point strictly inside (a, b) avoiding roots of p; enough
    # candidates that one must miss every root
    w = b - a
    for k in range(2 * p.degree + 3):
        m = a + w * Fraction(2 * k + 1, 2 * (2 * p.degree + 3))
        if a < m < b and p(m) != 0:
            return m
    raise AssertionError("no root-free split point (unreachable)")


def isolate_real_roots(p: ExactPoly, width=Fraction(1, 256)) -> list[tuple]:
    """Disjoint rational enclosures (lo, hi) of the distinct real roots.

    Each enclosure holds exactly one root of the squarefree part, in its
    open interior; enclosures ascend and have width <= the request.
    """
    s = p.squarefree_part()
    if s.degree <= 0:
        return []
    chain = sturm_chain(s)
    M = cauchy_bound(s)
    out = []
    stack = [(-M, M, count_roots_halfopen(chain, -M, M))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1 and hi - lo <= width:
            out.append((lo, hi))
            continue
        m = _nonroot_split(s, lo, hi)
        nl = count_roots_halfopen(chain, lo, m)
        stack.append((lo, m, nl))
        stack.append((m, hi, n - nl))
    out.sort()
    return out


def refine_enclosure(p: ExactPoly, lo: Fraction, hi: Fraction, width: Fraction):
    """Shrink a single-root enclosure of a squarefree p by sign bisection."""
    slo = p(lo)
    shi = p(hi)
    if slo == 0 or shi == 0 or (slo > 0) == (shi > 0):
        raise InputError("not a sign-change enclosure")
    while hi - lo > width:
        m = (lo + hi) / 2
        sm = p(m)
        if sm == 0:
            # exact rational root; collapse around it
            return m, m
        if (sm > 0) == (slo > 0):
            lo, slo = m, sm
        else:
            hi, shi = m, sm
    return lo, hi


def eval_interval(p: ExactPoly, lo, hi) -> tuple:
    """Exact range bounds of p on [lo, hi] by interval Horner."""
    lo, hi = _frac(lo), _frac(hi)
    L = H = p.lc() if p else Fraction(0)
    for c in reversed(p.coeffs[:-1]) if p else ():
        cands = (L * lo, L * hi, H * lo, H * hi)
        L, H = min(cands) + c, max(cands) + c
    return L, H


# ---------------------------------------------------------------------------
# cyclotomic polynomials (integer coefficients)


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> ExactPoly:
    if n == 1:
        return ExactPoly((-1, 1))
    num = ExactPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num = num / _cyclotomic(d)
    return num


def cyclotomic_int_coeffs(n: int) -> list[int]:
    if n < 1:
        raise InputError("cyclotomic index must be >= 1")
    return _cyclotomic(n).int_coeffs()


# ---------------------------------------------------------------------------
# parse / print


def exactpoly_from_str(s: str, var: str = "t") -> ExactPoly:
    from .fpoly import parse_ring_expr

    return parse_ring_expr(s, {var: ExactPoly.x()}, lambda n: ExactPoly.const(n))


def int_poly_str(coeffs, var: str = "t") -> str:
    """Render exact coefficients, descending powers, with signed joins."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return "0"
    parts = []
    for i in reversed(range(len(cs))):
        c = cs[i]
        if c == 0:
            continue
        mag = abs(c)
        mags = str(mag.numerator) if isinstance(mag, Fraction) and mag.denominator == 1 else str(mag)
        if i == 0:
            body = mags
        else:
            v = var if i == 1 else f"{var}^{i}"
            body = v if mag == 1 else f"{mags}*{v}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if c > 0 else f"-{body}")
    return "".join(parts)
