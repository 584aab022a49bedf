"""Univariate polynomials and rational functions over a finite field.

FieldPoly wraps the dense-list engine from :mod:`dscurves.fields` in an
immutable value type with operator syntax.  Coefficients ascend; the zero
polynomial has empty coeffs and degree -1.

The same class doubles as "polynomial over a residue field" once
:func:`residue_field` has turned a monic irreducible pi in F_q[t] into a
tower level F_q[t]/(pi); the adjoined root keeps code F.q, so reducing a
coefficient c(t) modulo pi is just evaluating c at that code.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import fields
from .errors import InputError, ValidationError
from .fields import FiniteField

__all__ = [
    "FieldPoly",
    "RatFunc",
    "INFINITY",
    "poly_from_str",
    "poly_to_str",
    "ratfunc_from_str",
    "irreducibles",
    "irreducible_count",
    "residue_field",
    "ord_at",
]

INFINITY = "inf"  # the place at infinity of F_q(t)


class FieldPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("FieldPoly is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, F):
        return cls(F, ())

    @classmethod
    def one(cls, F):
        return cls(F, (1,))

    @classmethod
    def x(cls, F):
        return cls(F, (0, 1))

    @classmethod
    def const(cls, F, c):
        return cls(F, (c,))

    @classmethod
    def from_code(cls, F, code: int):
        """Decode sum(c_i * q**i) back into coefficients."""
        cs = []
        while code:
            code, r = divmod(code, F.q)
            cs.append(r)
        return cls(F, cs)

    def code(self) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * self.field.q + c
        return out

    # -- basic structure -----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = FieldPoly.const(self.field, other % self.field.p)
        return (
            isinstance(other, FieldPoly)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __repr__(self):
        return f"FieldPoly({self.field!r}, {self.to_str()!r})"

    def __str__(self):
        return self.to_str()

    # -- ring operations -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldPoly):
            if other.field is not self.field:
                raise InputError("mixed fields")
            return other
        if isinstance(other, int):
            return FieldPoly.const(self.field, other % self.field.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldPoly(self.field, fields.pl_add(self.field, list(self.coeffs), list(o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldPoly(self.field, fields.pl_neg(self.field, list(self.coeffs)))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldPoly(self.field, fields.pl_sub(self.field, list(self.coeffs), list(o.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldPoly(self.field, fields.pl_mul(self.field, list(self.coeffs), list(o.coeffs)))

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        q, r = fields.pl_divmod(self.field, list(self.coeffs), list(o.coeffs))
        return FieldPoly(self.field, q), FieldPoly(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise InputError("negative exponent")
        r = FieldPoly.one(self.field)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __call__(self, x: int) -> int:
        return fields.pl_eval(self.field, list(self.coeffs), x)

    # -- utilities -----------------------------------------------------------

    def monic(self):
        return FieldPoly(self.field, fields.pl_monic(self.field, list(self.coeffs)))

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def derivative(self):
        return FieldPoly(self.field, fields.pl_deriv(self.field, list(self.coeffs)))

    def shift(self, k: int):
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return FieldPoly(self.field, (0,) * k + self.coeffs)

    def subst_power(self, e: int):
        """t -> t**e.  Equals the Frobenius twist c -> c(t**Q) for Q = q**j."""
        if e < 1:
            raise InputError("substitution power must be >= 1")
        if not self.coeffs:
            return self
        out = [0] * (self.degree * e + 1)
        for i, c in enumerate(self.coeffs):
            out[i * e] = c
        return FieldPoly(self.field, out)

    def gcd(self, other):
        o = self._coerce(other)
        return FieldPoly(self.field, fields.pl_gcd(self.field, list(self.coeffs), list(o.coeffs)))

    def xgcd(self, other):
        """(g, u, v) with u*self + v*other = g and g monic."""
        F = self.field
        r0, r1 = self, self._coerce(other)
        u0, u1 = FieldPoly.one(F), FieldPoly.zero(F)
        v0, v1 = FieldPoly.zero(F), FieldPoly.one(F)
        while r1:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, u0 - q * u1
            v0, v1 = v1, v0 - q * v1
        if r0 and r0.coeffs[-1] != 1:
            c = FieldPoly.const(F, F.inv(r0.coeffs[-1]))
            r0, u0, v0 = r0 * c, u0 * c, v0 * c
        return r0, u0, v0

    def powmod(self, e: int, m):
        return FieldPoly(
            self.field, fields.pl_powmod(self.field, list(self.coeffs), e, list(m.coeffs))
        )

    def is_squarefree(self) -> bool:
        if not self:
            return False
        return self.gcd(self.derivative()).degree == 0

    def is_irreducible(self) -> bool:
        return fields._is_irreducible_list(self.field, list(self.coeffs))

    def roots(self) -> list[int]:
        """All roots in the coefficient field, ascending by code (scan sized)."""
        return [x for x in range(self.field.q) if self(x) == 0]

    def factor(self) -> list[tuple["FieldPoly", int]]:
        """Monic irreducible factors with multiplicity, ascending by (degree, code).

        Trial division against the irreducibles stream; deterministic, meant
        for the small moduli this package works with.
        """
        if not self:
            raise InputError("cannot factor 0")
        f = self.monic()
        out = []
        d = 1
        while f.degree > 0:
            if 2 * d > f.degree:
                out.append((f, 1))
                break
            for pi in irreducibles(self.field, d):
                e = 0
                while True:
                    q, r = divmod(f, pi)
                    if r:
                        break
                    f, e = q, e + 1
                if e:
                    out.append((pi, e))
                    if 2 * d > f.degree:
                        break
            d += 1
        out.sort(key=lambda t: (t[0].degree, t[0].code()))
        return out

    def ddf_degrees(self) -> dict[int, int]:
        """Distinct-degree profile {factor degree: count} of a squarefree monic poly."""
        if not self.is_monic():
            raise ValidationError("ddf needs a monic polynomial")
        if not self.is_squarefree():
            raise ValidationError("ddf needs a squarefree polynomial")
        F = self.field
        f = self
        out: dict[int, int] = {}
        h = FieldPoly.x(F)
        j = 0
        while f.degree > 0:
            j += 1
            if 2 * j > f.degree:
                out[f.degree] = out.get(f.degree, 0) + 1
                break
            h = h.powmod(F.q, f)
            g = f.gcd(h - FieldPoly.x(F))
            if g.degree > 0:
                out[j] = g.degree // j
                f = f // g
                h = h % f
        return out

    def to_str(self, var: str = "t") -> str:
        return poly_to_str(self, var)


# ---------------------------------------------------------------------------
# irreducibles


_IRR_CACHE: dict = {}


def irreducibles(F: FiniteField, d: int) -> list[FieldPoly]:
    """All monic irreducibles of degree d over F, ascending by code.

    Built by sieving with the cached lists of lower degree, so repeated
    calls across degrees share work.
    """
    if d < 1:
        raise InputError("degree must be >= 1")
    key = (id(F), d)
    got = _IRR_CACHE.get(key)
    if got is not None:
        return got
    out = []
    if d == 1:
        for c in range(F.q):
            out.append(FieldPoly(F, (c, 1)))
    else:
        lower = [p for e in range(1, d // 2 + 1) for p in irreducibles(F, e)]
        for code in range(F.q**d):
            cs = []
            a = code
            for _ in range(d):
                a, r = divmod(a, F.q)
                cs.append(r)
            cs.append(1)
            f = FieldPoly(F, cs)
            if all(f % p for p in lower):
                out.append(f)
    _IRR_CACHE[key] = out
    return out


def irreducible_count(F: FiniteField, d: int) -> int:
    """Necklace count (1/d) sum mu(e) q^(d/e)."""
    from .fields import mobius

    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += mobius(e) * F.q ** (d // e)
    return total // d


# ---------------------------------------------------------------------------
# residue fields F_q[t]/(pi)

_RES_CACHE: dict = {}


def residue_field(pi: FieldPoly) -> tuple[FiniteField, int]:
    """(E, theta) with E = F[t]/(pi) as a tower level and theta = image of t.

    pi must be monic irreducible.  Constants of F keep their codes in E,
    and theta is the adjoined root, so reduction mod pi is evaluation at
    theta with arithmetic in E.
    """
    key = (id(pi.field), pi.coeffs)
    got = _RES_CACHE.get(key)
    if got is not None:
        return got
    if pi.degree == 1:
        # t = -c0 in F itself
        E, theta = pi.field, pi.field.neg(pi.coeffs[0])
    else:
        if not pi.is_monic() or not pi.is_irreducible():
            raise ValidationError("residue field needs a monic irreducible")
        F = pi.field
        sym = "a" if F.symbol is None else chr(ord(F.symbol) + 1)
        E = FiniteField(F.p, pi.degree, F, pi.coeffs, sym)
        theta = F.q
    _RES_CACHE[key] = (E, theta)
    return E, theta


def reduce_mod(c: FieldPoly, E: FiniteField, theta: int) -> int:
    """Image of c(t) in the residue field, i.e. c(theta) evaluated in E."""
    acc = 0
    for cc in reversed(c.coeffs):
        acc = E.add(E.mul(acc, theta), cc)
    return acc


# ---------------------------------------------------------------------------
# rational functions


class RatFunc:
    """num/den over F[t], den monic, gcd(num, den) = 1; zero is 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num: FieldPoly, den: FieldPoly | None = None):
        F = num.field
        if den is None:
            den = FieldPoly.one(F)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num // g, den // g
        if den.lc() != 1:
            c = F.inv(den.lc())
            num = num * FieldPoly.const(F, c)
            den = den * FieldPoly.const(F, c)
        if not num:
            den = FieldPoly.one(F)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    @property
    def field(self):
        return self.num.field

    @classmethod
    def const(cls, F, c: int):
        return cls(FieldPoly.const(F, c))

    @classmethod
    def x(cls, F):
        return cls(FieldPoly.x(F))

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, FieldPoly)):
            other = RatFunc(FieldPoly._coerce(self.num, other))
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, FieldPoly)):
            c = FieldPoly._coerce(self.num, other)
            if c is NotImplemented:
                return c
            return RatFunc(c)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

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
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __pow__(self, e: int):
        if e < 0:
            return RatFunc(self.den, self.num) ** (-e)
        r = RatFunc.const(self.field, 1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def subst_power(self, e: int):
        return RatFunc(self.num.subst_power(e), self.den.subst_power(e))

    def __str__(self):
        if self.den.degree == 0:
            return poly_to_str(self.num)
        return f"({poly_to_str(self.num)})/({poly_to_str(self.den)})"

    def __repr__(self):
        return f"RatFunc({self!s})"


# ---------------------------------------------------------------------------
# places and valuations


def ord_at(r, place) -> int | float:
    """Valuation of a FieldPoly or RatFunc at a place.

    place is a monic irreducible FieldPoly or the string "inf".  The zero
    function returns math.inf.
    """
    if isinstance(r, FieldPoly):
        r = RatFunc(r)
    if not r:
        return math.inf
    if place == INFINITY:
        return r.den.degree - r.num.degree
    if not isinstance(place, FieldPoly):
        raise InputError(f"not a place: {place!r}")

    def mult(f: FieldPoly) -> int:
        e = 0
        while f.degree >= place.degree:
            q, rem = divmod(f, place)
            if rem:
                break
            f = q
            e += 1
        return e

    return mult(r.num) - mult(r.den)


# ---------------------------------------------------------------------------
# parsing and printing
#
# One tokenizer + recursive-descent evaluator shared by the univariate and
# multivariate (curve model) front ends.  The grammar is sums of products
# of powers, with parentheses, unary minus, integer literals, named symbols
# and a single-level "/" mapped to ring division.


def _tokenize(s: str):
    toks = []
    i, n = 0, len(s)
    while i < n:
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and s[j].isdigit():
                j += 1
            toks.append(("int", int(s[i:j])))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (s[j].isalnum() or s[j] == "_"):
                j += 1
            toks.append(("sym", s[i:j]))
            i = j
        elif s.startswith("**", i):
            toks.append(("^", None))
            i += 2
        elif ch in "+-*/^()":
            toks.append((ch, None))
            i += 1
        else:
            raise InputError(f"bad character {ch!r} in {s!r}")
    toks.append(("end", None))
    return toks


class _ExprParser:
    def __init__(self, toks, env, coerce_int):
        self.toks = toks
        self.pos = 0
        self.env = env
        self.coerce_int = coerce_int

    def peek(self):
        return self.toks[self.pos][0]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def parse(self):
        v = self.expr()
        if self.peek() != "end":
            raise InputError("trailing input in expression")
        return v

    def expr(self):
        neg = False
        if self.peek() in "+-":
            neg = self.next()[0] == "-"
        v = self.term()
        if neg:
            v = -v
        while self.peek() in "+-":
            op = self.next()[0]
            w = self.term()
            v = v - w if op == "-" else v + w
        return v

    def term(self):
        v = self.power()
        while self.peek() in "*/":
            op = self.next()[0]
            w = self.power()
            if op == "*":
                v = v * w
            else:
                v = v / w
        return v

    def power(self):
        v = self.atom()
        if self.peek() == "^":
            self.next()
            kind, val = self.next()
            if kind != "int":
                raise InputError("exponent must be an integer literal")
            v = v**val
        return v

    def atom(self):
        kind, val = self.next()
        if kind == "int":
            return self.coerce_int(val)
        if kind == "sym":
            if val not in self.env:
                raise InputError(f"unknown symbol {val!r}")
            return self.env[val]
        if kind == "(":
            v = self.expr()
            if self.next()[0] != ")":
                raise InputError("unbalanced parentheses")
            return v
        raise InputError(f"unexpected token {kind!r}")


def parse_ring_expr(s: str, env: dict, coerce_int):
    return _ExprParser(_tokenize(s), env, coerce_int).parse()


def ratfunc_from_str(F: FiniteField, s: str, var: str = "t") -> RatFunc:
    env = {var: RatFunc.x(F)}
    if F.symbol is not None:
        env[F.symbol] = RatFunc.const(F, F.base.q)
        # deeper towers expose every level's symbol
        lvl = F.base
        while lvl is not None and lvl.symbol is not None:
            env[lvl.symbol] = RatFunc.const(F, lvl.base.q)
            lvl = lvl.base
    return parse_ring_expr(s, env, lambda n: RatFunc.const(F, n % F.p))


def poly_from_str(F: FiniteField, s: str, var: str = "t") -> FieldPoly:
    r = ratfunc_from_str(F, s, var)
    if not r.is_poly():
        raise InputError(f"not a polynomial: {s!r}")
    return r.num  # den is monic degree 0, hence 1


def elem_to_str(F: FiniteField, c: int) -> str:
    """Render a field element code; extension elements use the field symbol."""
    if F.base is None:
        return str(c)
    parts = []
    for i in reversed(range(F.deg)):
        d = F.digits(c)[i]
        if d == 0:
            continue
        ds = elem_to_str(F.base, d)
        if i == 0:
            parts.append(ds)
        else:
            head = "" if ds == "1" else (f"({ds})*" if _needs_parens(ds) else f"{ds}*")
            parts.append(f"{head}{F.symbol}" + (f"^{i}" if i > 1 else ""))
    return "+".join(parts) if parts else "0"


def _needs_parens(s: str) -> bool:
    return any(op in s for op in "+-")


def poly_to_str(f: FieldPoly, var: str = "t") -> str:
    if not f:
        return "0"
    F = f.field
    parts = []
    for i in reversed(range(f.degree + 1)):
        c = f.coeffs[i]
        if c == 0:
            continue
        cs = elem_to_str(F, c)
        if i == 0:
            parts.append(f"({cs})" if _needs_parens(cs) else cs)
            continue
        v = var if i == 1 else f"{var}^{i}"
        if cs == "1":
            parts.append(v)
        elif _needs_parens(cs):
            parts.append(f"({cs})*{v}")
        else:
            parts.append(f"{cs}*{v}")
    return "+".join(parts)
