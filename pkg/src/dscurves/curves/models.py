"""Pointwise-scannable curve models.

Hyperelliptic curves are stored as y^2 + h(x) y = f(x).  Points at
infinity are those of the weighted projective closure: with
d = max(2 deg h, deg f) and g = floor((d - 1) / 2), the fibre over x = oo
is cut out by y^2 + h_{g+1} y = f_{2g+2} in the named coefficients.  For
a model that is singular up there this counts the closure itself, not
its normalization; the catalogued equations are all smooth at infinity,
and the affine locus is checked smooth at construction either way.

Plane curves come in two flavours.  PlaneProjective takes a homogeneous
form and scans the low-degree points for singularities before accepting
it.  PlaneAffinePlus scans an affine equation and takes the closed
points at infinity on trust, as a list of their residue degrees; it
exists for families whose natural plane model is singular at infinity
but whose missing places are known by hand.
"""

from __future__ import annotations

from typing import NamedTuple

from ..errors import InputError, NotACurveError
from ..fields import FiniteField, extension_field, field_from_order
from ..fpoly import FieldPoly, parse_ring_expr, poly_from_str

__all__ = [
    "FamilyParams",
    "Hyperelliptic",
    "MPoly",
    "PlaneAffinePlus",
    "PlaneProjective",
    "curve_from_str",
    "mpoly_from_str",
]


# ---------------------------------------------------------------------------
# small multivariate polynomials, just enough for plane models


class MPoly:
    """Polynomial in several variables over a finite field.

    Terms live in a dict {exponent tuple: nonzero coefficient code}; the
    zero polynomial has no terms.  Only what the curve models need is
    implemented: ring operations, partial derivatives, evaluation over
    any extension of the coefficient field.
    """

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: FiniteField, nvars: int, terms: dict):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nvars", int(nvars))
        object.__setattr__(
            self, "terms", {tuple(e): c for e, c in terms.items() if c}
        )

    def __setattr__(self, *a):
        raise AttributeError("MPoly is immutable")

    @classmethod
    def const(cls, field: FiniteField, nvars: int, c: int) -> "MPoly":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, field: FiniteField, nvars: int, i: int) -> "MPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(field, nvars, {tuple(e): 1})

    def _coerced(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.field is not self.field or other.nvars != self.nvars:
                raise InputError("mixed polynomial rings")
            return other
        if isinstance(other, int):
            return MPoly.const(self.field, self.nvars, other % self.field.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerced(other)
        if o is NotImplemented:
            return o
        F = self.field
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = F.add(t.get(e, 0), c)
        return MPoly(F, self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return MPoly(F, self.nvars, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerced(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerced(other)
        if o is NotImplemented:
            return o
        F = self.field
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = F.add(t.get(e, 0), F.mul(c1, c2))
        return MPoly(F, self.nvars, t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise InputError("polynomial powers must be nonnegative integers")
        out = MPoly.const(self.field, self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, MPoly)
            and self.field is other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.field), self.nvars, frozenset(self.terms.items())))

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def deriv(self, i: int) -> "MPoly":
        F = self.field
        t: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            if k % F.p == 0:
                continue
            e2 = list(e)
            e2[i] = k - 1
            t[tuple(e2)] = F.mul(c, k % F.p)
        return MPoly(F, self.nvars, t)

    def eval(self, E: FiniteField, point) -> int:
        """Value at a tuple of codes of an extension of the base field."""
        acc = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = E.mul(v, E.pow(x, k))
            acc = E.add(acc, v)
        return acc

    def __repr__(self):
        names = "xyzuvw"
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), e)):
            c = self.terms[e]
            mon = "*".join(
                f"{names[i]}^{k}" if k > 1 else names[i]
                for i, k in enumerate(e)
                if k
            )
            if not mon:
                bits.append(str(c))
            elif c == 1:
                bits.append(mon)
            else:
                bits.append(f"{c}*{mon}")
        return f"MPoly({' + '.join(bits)})"


def mpoly_from_str(F: FiniteField, s: str, names) -> MPoly:
    n = len(names)
    env = {name: MPoly.var(F, n, i) for i, name in enumerate(names)}
    lvl = F
    while lvl is not None and lvl.symbol is not None:
        env.setdefault(lvl.symbol, MPoly.const(F, n, lvl.base.q))
        lvl = lvl.base
    return parse_ring_expr(s, env, lambda k: MPoly.const(F, n, k % F.p))


# ---------------------------------------------------------------------------
# the models


class Hyperelliptic:
    """y^2 + h(x) y = f(x), checked smooth on the affine locus and
    irreducible at construction time."""

    __slots__ = ("field", "h", "f", "wdegree")

    def __init__(self, field: FiniteField, h, f):
        if not isinstance(h, FieldPoly):
            h = FieldPoly(field, h)
        if not isinstance(f, FieldPoly):
            f = FieldPoly(field, f)
        if h.field is not field or f.field is not field:
            raise InputError("h and f must live over the stated field")
        d = max(2 * h.degree, f.degree)
        if d < 1:
            raise NotACurveError("both defining polynomials are constant")
        if field.p == 2:
            if not h:
                raise NotACurveError(
                    "characteristic-2 model needs h != 0 to be separable"
                )
            dh = h.derivative()
            df = f.derivative()
            if h.gcd(df * df + dh * dh * f).degree > 0:
                raise NotACurveError(
                    "affine model is singular where h vanishes"
                )
            if _splits_char2(field, h, f):
                raise NotACurveError("y^2 + h y - f is a product of two sheets")
        else:
            D = f * FieldPoly.const(field, 4 % field.p) + h * h
            if D.degree < 1:
                raise NotACurveError("4 f + h^2 collapses to a constant")
            Dd = D.derivative()
            if not Dd or D.gcd(Dd).degree > 0:
                raise NotACurveError("4 f + h^2 has a repeated root")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "wdegree", d)

    def __setattr__(self, *a):
        raise AttributeError("Hyperelliptic is immutable")

    @property
    def genus(self) -> int:
        return (self.wdegree - 1) // 2

    def infinity_coeffs(self) -> tuple[int, int]:
        """(h_{g+1}, f_{2g+2}), the pair cutting out the fibre at infinity."""
        g = self.genus
        h1 = self.h.coeffs[g + 1] if self.h.degree >= g + 1 else 0
        f2 = self.f.coeffs[2 * g + 2] if self.f.degree >= 2 * g + 2 else 0
        return h1, f2

    def __eq__(self, other):
        return (
            isinstance(other, Hyperelliptic)
            and self.field is other.field
            and (self.h, self.f) == (other.h, other.f)
        )

    def __hash__(self):
        return hash((id(self.field), self.h, self.f))

    def __repr__(self):
        return (
            f"Hyperelliptic(q={self.field.q}, "
            f"h={self.h.to_str('x')}, f={self.f.to_str('x')})"
        )


def _splits_char2(F: FiniteField, h: FieldPoly, f: FieldPoly) -> bool:
    """Whether y^2 + h y + f has a root in F_q[x] (so the model is two sheets).

    A root over F_q(x) is integral, hence a polynomial g with
    f = g^2 + h g.  Squaring is additive in characteristic 2, so g solves
    an F_2-linear system over the bit coordinates of its coefficients.
    """
    B = max((f.degree + 1) // 2, h.degree, 0)
    k = F.kabs

    def vec(poly: FieldPoly) -> int:
        m = 0
        for i, c in enumerate(poly.coeffs):
            m |= c << (i * k)
        return m

    basis: list[tuple[int, int]] = []  # (pivot bit, reduced column)
    for j in range(B + 1):
        for b in range(k):
            g0 = FieldPoly(F, (0,) * j + (1 << b,))
            col = vec(g0 * g0 + h * g0)
            for low, pv in basis:
                if (col >> low) & 1:
                    col ^= pv
            if col == 0:
                continue
            low = (col & -col).bit_length() - 1
            basis = [
                (lw, pv ^ col if (pv >> low) & 1 else pv) for lw, pv in basis
            ]
            basis.append((low, col))
    target = vec(f)
    for low, pv in basis:
        if (target >> low) & 1:
            target ^= pv
    return target == 0


class PlaneProjective:
    """Smooth plane curve F(x, y, z) = 0 for a homogeneous form F.

    Smoothness is certified on all points of the extensions small enough
    to scan; a singular point of higher degree would get past this, so
    the guarantee is only up to the tested degree.
    """

    __slots__ = ("field", "form", "partials", "degree", "tested_degree")

    _SMOOTH_SCAN = 1 << 16

    def __init__(self, field: FiniteField, form: MPoly):
        if not isinstance(form, MPoly) or form.nvars != 3:
            raise InputError("plane curve wants an MPoly in x, y, z")
        if form.field is not field:
            raise InputError("form must live over the stated field")
        if not form or not form.is_homogeneous() or form.degree < 1:
            raise InputError("plane curve needs a nonconstant homogeneous form")
        partials = tuple(form.deriv(i) for i in range(3))
        jmax = 1
        while field.q ** (2 * (jmax + 1)) <= self._SMOOTH_SCAN:
            jmax += 1
        for j in range(1, jmax + 1):
            E = extension_field(field, j)
            for pt in projective_points(E):
                if form.eval(E, pt) == 0 and all(
                    p.eval(E, pt) == 0 for p in partials
                ):
                    raise NotACurveError(
                        f"singular point {pt} over the degree-{j} extension"
                    )
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "partials", partials)
        object.__setattr__(self, "degree", form.degree)
        object.__setattr__(self, "tested_degree", jmax)

    def __setattr__(self, *a):
        raise AttributeError("PlaneProjective is immutable")

    @property
    def genus(self) -> int:
        d = self.degree
        return (d - 1) * (d - 2) // 2

    def __repr__(self):
        return f"PlaneProjective(q={self.field.q}, form={self.form!r})"


def projective_points(E: FiniteField):
    """The points of P^2(E) in normalized coordinates."""
    for x in range(E.q):
        for y in range(E.q):
            yield (x, y, 1)
    for x in range(E.q):
        yield (x, 1, 0)
    yield (1, 0, 0)


class PlaneAffinePlus(NamedTuple):
    """Affine plane model with declared places at infinity.

    infinity lists the residue degrees of the missing closed points; a
    degree-d entry contributes d points over F_{q^m} exactly when d | m.
    Nothing about those places is verified here, the caller owns that
    bookkeeping.
    """

    field: FiniteField
    form: MPoly
    infinity: tuple

    @classmethod
    def make(cls, field: FiniteField, form: MPoly, infinity) -> "PlaneAffinePlus":
        if not isinstance(form, MPoly) or form.nvars != 2:
            raise InputError("affine plane curve wants an MPoly in x, y")
        if form.field is not field:
            raise InputError("form must live over the stated field")
        if not form or form.degree < 1:
            raise InputError("affine plane curve needs a nonconstant equation")
        inf = tuple(int(d) for d in infinity)
        if any(d < 1 for d in inf):
            raise InputError("residue degrees at infinity must be >= 1")
        return cls(field, form, inf)


class FamilyParams(NamedTuple):
    """Selector for the curve families with known zeta functions.

    family is one of hermitian, suzuki, ree, drinfeld_dl (spelling is
    forgiving); param means q0, e, s, q respectively.
    """

    family: str
    param: int


# ---------------------------------------------------------------------------
# the one-line curve notation used on the command line


def curve_from_str(s: str):
    """Parse 'hyp q=2 h=x^2+x f=x^5+x^3' or 'plane q=4 F=x^3+y^3+z^3'."""
    toks = s.split()
    if not toks:
        raise InputError("empty curve description")
    kind, kv = toks[0], {}
    for tok in toks[1:]:
        if "=" not in tok:
            raise InputError(f"expected key=value, got {tok!r}")
        key, val = tok.split("=", 1)
        if key in kv:
            raise InputError(f"duplicate key {key!r}")
        kv[key] = val
    if "q" not in kv:
        raise InputError("curve description needs q=<field size>")
    F = field_from_order(int(kv.pop("q")))
    if kind == "hyp":
        if "f" not in kv:
            raise InputError("hyperelliptic description needs f=<poly in x>")
        f = poly_from_str(F, kv.pop("f"), var="x")
        h = poly_from_str(F, kv.pop("h"), var="x") if "h" in kv else FieldPoly.zero(F)
        if kv:
            raise InputError(f"unknown keys for hyp: {sorted(kv)}")
        return Hyperelliptic(F, h, f)
    if kind == "plane":
        if "F" not in kv:
            raise InputError("plane description needs F=<homogeneous poly in x,y,z>")
        form = mpoly_from_str(F, kv.pop("F"), ("x", "y", "z"))
        if kv:
            raise InputError(f"unknown keys for plane: {sorted(kv)}")
        return PlaneProjective(F, form)
    raise InputError(f"unknown curve kind {kind!r}; know 'hyp' and 'plane'")
