"""Additive polynomials in skew form, and their x-polynomial shadows.

A linearized polynomial sum c_i x^(q^i) is stored as the skew polynomial
sum c_i tau^i in the Frobenius tau, with the commutation rule
tau c = c^q tau.  Composition of additive maps is then skew
multiplication, which keeps list sizes at the tau-degree instead of the
x-degree q^r.  Coefficients are FieldPoly or RatFunc over F_q; on those
the q-power Frobenius is t -> t^q coefficientwise, i.e. subst_power(q),
because the scalars of F_q are fixed.

Torsion polynomials divide each other in the *commutative* ring
F_q(t)[x], not the skew ring, so XPoly materializes the x-form when a
product or quotient of ordinary polynomials is wanted.  XPoly stays
sparse: a tau-degree-r action touches only r + 1 monomials out of q^r.
"""

from __future__ import annotations

from .errors import InputError
from .fpoly import FieldPoly, RatFunc

__all__ = ["LinearizedPoly", "XPoly"]


def _twist(c, qe: int):
    if qe == 1:
        return c
    return c.subst_power(qe)


class LinearizedPoly:
    """sum c_i tau^i with tau c = c^q tau; coeffs ascending in tau."""

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        for c in cs:
            if c.field.q != q:
                raise InputError(
                    f"coefficient field has order {c.field.q}, twist wants {q}"
                )
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("LinearizedPoly is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, q: int):
        return cls(q, ())

    @classmethod
    def identity(cls, q: int, one):
        """The map x -> x, i.e. 1 * tau^0.  one is the ring's unit."""
        return cls(q, (one,))

    @classmethod
    def tau(cls, q: int, one, i: int = 1):
        return cls(q, (one * 0,) * i + (one,))

    # -- basic structure ------------------------------------------------------

    @property
    def tau_degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, LinearizedPoly)
            and self.q == other.q
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        raise IndexError(i)

    # -- additive-map algebra -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return LinearizedPoly(self.q, out)

    def __neg__(self):
        return LinearizedPoly(self.q, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        """Left multiplication by the scalar map x -> c x."""
        return LinearizedPoly(self.q, [c * d for d in self.coeffs])

    def __mul__(self, other):
        """Composition self o other, the skew product."""
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LinearizedPoly.zero(self.q)
        out = [self.coeffs[0] * 0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            qe = self.q**i
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * _twist(b, qe)
        return LinearizedPoly(self.q, out)

    def __pow__(self, e: int):
        if e < 0:
            raise InputError("negative composition power")
        if not self.coeffs:
            return self if e else NotImplemented
        one = self.coeffs[0] ** 0
        r = LinearizedPoly.identity(self.q, one)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    # -- materialization ------------------------------------------------------

    def x_degree(self) -> int:
        if not self.coeffs:
            return -1
        return self.q**self.tau_degree

    def to_xpoly(self) -> "XPoly":
        terms = {}
        for i, c in enumerate(self.coeffs):
            if c:
                terms[self.q**i] = c
        return XPoly(terms)

    def __call__(self, v):
        """Evaluate the additive map at a ring element v."""
        out = None
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            term = c * v ** (self.q**i)
            out = term if out is None else out + term
        if out is None:
            return self.coeffs[0] * 0 if self.coeffs else 0
        return out

    def __str__(self):
        return self.to_xpoly().to_str()

    def __repr__(self):
        return f"LinearizedPoly(q={self.q}, {self!s})"


class XPoly:
    """Sparse polynomial in x over FieldPoly or RatFunc coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        t = {e: c for e, c in dict(terms).items() if c}
        for e in t:
            if e < 0:
                raise InputError("negative exponent")
        object.__setattr__(self, "terms", t)

    def __setattr__(self, *a):
        raise AttributeError("XPoly is immutable")

    @property
    def degree(self) -> int:
        return max(self.terms) if self.terms else -1

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, XPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def leading(self):
        e = self.degree
        return e, self.terms[e]

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return XPoly(out)

    def __neg__(self):
        return XPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e, a in self.terms.items():
            for f, b in other.terms.items():
                k = e + f
                s = out.get(k, 0) + a * b
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return XPoly(out)

    def scale(self, c):
        if not c:
            return XPoly({})
        return XPoly({e: a * c for e, a in self.terms.items()})

    def shift(self, k: int):
        return XPoly({e + k: a for e, a in self.terms.items()})

    def __divmod__(self, other):
        if not other:
            raise ZeroDivisionError("XPoly division by zero")
        de, dc = other.leading()
        rem = self
        qt = {}
        while rem and rem.degree >= de:
            e, c = rem.leading()
            if isinstance(c, RatFunc):
                f = c / dc
            else:
                f, r = divmod(c, dc)
                if r:
                    raise InputError("inexact coefficient division in XPoly")
            qt[e - de] = f
            rem = rem - other.scale(f).shift(e - de)
        return XPoly(qt), rem

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def map_coeffs(self, fn) -> "XPoly":
        return XPoly({e: fn(c) for e, c in self.terms.items()})

    def to_dense(self, F, fn) -> FieldPoly:
        """FieldPoly over F in the former x, sending each coefficient
        through fn (a map to codes of F).  Meant for reduction at a
        finite place, where the degree is small enough to go dense."""
        out = [0] * (self.degree + 1) if self.terms else []
        for e, c in self.terms.items():
            out[e] = fn(c)
        return FieldPoly(F, out)

    def to_str(self, var: str = "x") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = str(self.terms[e])
            if e == 0:
                parts.append(c if _is_atom(c) else f"({c})")
                continue
            xs = var if e == 1 else f"{var}^{e}"
            if c == "1":
                parts.append(xs)
            elif _is_atom(c):
                parts.append(f"{c}*{xs}")
            else:
                parts.append(f"({c})*{xs}")
        return "+".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"XPoly({self!s})"


def _is_atom(s: str) -> bool:
    return not any(ch in s for ch in "+-*/ ") or (s.startswith("-") and _is_atom(s[1:]))
