"""Cyclotomic covers of the projective line via the Carlitz module.

The M-torsion of the Carlitz action cuts out an abelian cover of P^1
with group (F_q[t]/M)^*; a subgroup H picks out a quotient curve.  All
place bookkeeping happens on the group side: the Frobenius at a finite
prime is its residue class, inertia at a prime dividing M is the kernel
of reduction by the complementary factor, and the infinite place obeys
the fixed rule that its inertia is the image of the constants and the
places above it have degree one.

Residues mod M travel as integer codes, base q by ascending
coefficient, so subgroup closures and coset tables stay cheap.  The
zeta numerator comes from Dirichlet characters of G/H with values in
Z[zeta_N]; each raw L-series (summed over monic f coprime to M) is
completed before use: Euler factors at primes dividing M away from the
conductor are divided back out, and a character trivial on the
constants surrenders its zero at T = 1 to the split infinite place.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

from . import fields
from .errors import DSError, InputError, SizeLimitError, ValidationError
from .exactpoly import cyclotomic_int_coeffs
from .fields import factor_int, is_prime
from .fpoly import FieldPoly, irreducibles
from .skew import LinearizedPoly, XPoly
from .zeta import ZetaData

__all__ = [
    "CycInt",
    "ModulusGroup",
    "carlitz_action",
    "carlitz_phi",
    "char_l_poly",
    "characters",
    "ds_criterion_51",
    "place_counts",
    "residual_degree",
    "unit_group",
    "zero_places_52",
    "zero_places_52_range",
    "zeta_numerator",
]

_GROUP_CAP = 10**7
_ACTION_CAP = 2**10
_PHI_DEG_CAP = 12
_ZETA_CAP = 2 * 10**4


# ---------------------------------------------------------------------------
# cyclotomic integers

_CYCLO: dict[int, tuple[int, ...]] = {}


def _cyclo(n: int) -> tuple[int, ...]:
    got = _CYCLO.get(n)
    if got is None:
        got = _CYCLO[n] = tuple(cyclotomic_int_coeffs(n))
    return got


class CycInt:
    """Element of Z[zeta_n] in the power basis mod the n-th cyclotomic
    polynomial.  Plain integer vectors; all arithmetic is exact."""

    __slots__ = ("n", "vec")

    def __init__(self, n: int, vec: Sequence[int]):
        phi = _cyclo(n)
        d = len(phi) - 1
        v = list(vec)
        for i in range(len(v) - 1, d - 1, -1):
            c = v[i]
            if c:
                v[i] = 0
                for j in range(d):
                    v[i - d + j] -= c * phi[j]
        v = v[:d] + [0] * (d - len(v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "vec", tuple(v))

    def __setattr__(self, *a):
        raise AttributeError("CycInt is immutable")

    @classmethod
    def root(cls, n: int, k: int) -> "CycInt":
        k %= n
        return cls(n, (0,) * k + (1,))

    @classmethod
    def integer(cls, n: int, c: int) -> "CycInt":
        return cls(n, (c,))

    def __bool__(self):
        return any(self.vec)

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycInt.integer(self.n, other)
        return isinstance(other, CycInt) and self.n == other.n and self.vec == other.vec

    def __hash__(self):
        return hash((self.n, self.vec))

    def _coerce(self, other):
        if isinstance(other, int):
            return CycInt.integer(self.n, other)
        if isinstance(other, CycInt):
            if other.n != self.n:
                raise InputError("mixed cyclotomic orders")
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycInt(self.n, [a + b for a, b in zip(self.vec, o.vec)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.n, [-a for a in self.vec])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycInt(self.n, [a - b for a, b in zip(self.vec, o.vec)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = [0] * (2 * len(self.vec) - 1)
        for i, a in enumerate(self.vec):
            if a:
                for j, b in enumerate(o.vec):
                    if b:
                        out[i + j] += a * b
        return CycInt(self.n, out)

    __rmul__ = __mul__

    def is_rational(self) -> bool:
        return not any(self.vec[1:])

    def as_int(self) -> int:
        if not self.is_rational():
            raise ValidationError(f"not a rational integer: {self}")
        return self.vec[0]

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for k in range(len(self.vec) - 1, -1, -1):
            c = self.vec[k]
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                z = f"z{self.n}" if k == 1 else f"z{self.n}^{k}"
                parts.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        s = "+".join(parts)
        return s.replace("+-", "-")

    def __repr__(self):
        return f"CycInt({self.n}; {self})"


def _cp_trim(L: list[CycInt]) -> list[CycInt]:
    while L and not L[-1]:
        L.pop()
    return L


def _cp_mul(A: list[CycInt], B: list[CycInt]) -> list[CycInt]:
    n = A[0].n
    out = [CycInt.integer(n, 0)] * (len(A) + len(B) - 1)
    for i, a in enumerate(A):
        if a:
            for j, b in enumerate(B):
                if b:
                    out[i + j] = out[i + j] + a * b
    return _cp_trim(out)


def _cp_div_unit(L: list[CycInt], u: CycInt, d: int) -> list[CycInt]:
    """Exact division by 1 - u*T^d, ascending recurrence."""
    Q = []
    for i in range(len(L)):
        v = L[i]
        if i >= d and Q[i - d]:
            v = v + u * Q[i - d]
        Q.append(v)
    for i in range(max(0, len(Q) - d), len(Q)):
        if Q[i]:
            raise DSError("L-series division left a remainder")
    return _cp_trim(Q[: max(0, len(Q) - d)])


# ---------------------------------------------------------------------------
# the group (F_q[t]/M)^* with a distinguished subgroup


class _Quotient:
    __slots__ = ("reps", "index", "repof", "basis", "orders", "exponent", "dl")

    def __init__(self, reps, index, repof, basis, orders, exponent, dl):
        self.reps = reps
        self.index = index
        self.repof = repof
        self.basis = basis
        self.orders = orders
        self.exponent = exponent
        self.dl = dl


class ModulusGroup:
    """(F_q[t]/M)^* together with the subgroup generated by hgens."""

    __slots__ = (
        "field",
        "M",
        "factors",
        "order",
        "hgens",
        "H",
        "subgroup_order",
        "index",
        "_n",
        "_mlist",
        "_quot",
        "_counts",
    )

    def __init__(self, M: FieldPoly, gens: Iterable[FieldPoly] = ()):
        if M.degree < 1:
            raise InputError("modulus must have degree >= 1")
        if not M.is_monic():
            raise InputError("modulus must be monic")
        F = M.field
        factors = tuple(M.factor())
        order = _euler_phi(F.q, factors)
        if order > _GROUP_CAP:
            raise SizeLimitError(f"unit group order {order} exceeds {_GROUP_CAP}")
        object.__setattr__(self, "field", F)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_n", M.degree)
        object.__setattr__(self, "_mlist", list(M.coeffs))
        gcodes = []
        for g in gens:
            if not isinstance(g, FieldPoly):
                raise InputError("subgroup generators must be FieldPoly")
            r = g % M
            if not self._is_unit_list(list(r.coeffs)):
                raise InputError(f"generator {g.to_str()} is not coprime to the modulus")
            gcodes.append(self._pack(list(r.coeffs)))
        object.__setattr__(self, "hgens", tuple(gcodes))
        H = self._closure(gcodes)
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "subgroup_order", len(H))
        if order % len(H):
            raise DSError("subgroup order does not divide the group order")
        object.__setattr__(self, "index", order // len(H))
        object.__setattr__(self, "_quot", None)
        object.__setattr__(self, "_counts", None)

    def __setattr__(self, *a):
        raise AttributeError("ModulusGroup is immutable")

    def __repr__(self):
        return (
            f"ModulusGroup(M={self.M.to_str()}, q={self.field.q}, "
            f"order={self.order}, index={self.index})"
        )

    # -- packed residue arithmetic -------------------------------------------

    def _unpack(self, code: int) -> list[int]:
        q = self.field.q
        cs = []
        for _ in range(self._n):
            code, r = divmod(code, q)
            cs.append(r)
        return fields.pl_trim(cs)

    def _pack(self, cs: list[int]) -> int:
        q = self.field.q
        code = 0
        for c in reversed(cs):
            code = code * q + c
        return code

    def _is_unit_list(self, cs: list[int]) -> bool:
        if not cs:
            return False
        for pi, _ in self.factors:
            if not fields.pl_rem(self.field, cs, list(pi.coeffs)):
                return False
        return True

    def mul(self, a: int, b: int) -> int:
        F = self.field
        return self._pack(fields.pl_mulmod(F, self._unpack(a), self._unpack(b), self._mlist))

    def pow(self, a: int, e: int) -> int:
        F = self.field
        return self._pack(fields.pl_powmod(F, self._unpack(a), e, self._mlist))

    def reduce(self, f: FieldPoly) -> int:
        if f.field is not self.field:
            raise InputError("polynomial from a different coefficient field")
        return self._pack(list((f % self.M).coeffs))

    def lift(self, code: int) -> FieldPoly:
        return FieldPoly(self.field, self._unpack(code))

    def members(self) -> Iterator[int]:
        """All unit codes, ascending."""
        for code in range(self.field.q**self._n):
            if self._is_unit_list(self._unpack(code)):
                yield code

    def in_subgroup(self, code: int) -> bool:
        return code in self.H

    def _closure(self, gcodes) -> frozenset:
        seen = {1}
        stack = [1]
        while stack:
            x = stack.pop()
            for g in gcodes:
                y = self.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return frozenset(seen)

    # -- local structure at primes dividing M ----------------------------------

    def _cofactor(self, pi: FieldPoly, v: int) -> FieldPoly:
        D = self.M
        for _ in range(v):
            D, r = divmod(D, pi)
            if r:
                raise DSError("stored factorization does not divide the modulus")
        return D

    def _embedded_local_units(self, pi: FieldPoly, v: int) -> list[int]:
        """Codes of the kernel of reduction mod M/pi^v, i.e. the local unit
        group at pi sitting inside G."""
        F = self.field
        D = self._cofactor(pi, v)
        dl = list(D.coeffs)
        pil = list(pi.coeffs)
        span = F.q ** (v * pi.degree)
        out = []
        for w in range(span):
            if D.degree:
                cs = fields.pl_add(F, [1], fields.pl_mul(F, dl, self._unpack(w)))
                cs = fields.pl_rem(F, cs, self._mlist)
            else:
                # D = 1 identifies the local units with all of G
                cs = self._unpack(w)
            if cs and fields.pl_rem(F, cs, pil):
                out.append(self._pack(cs))
        want = _euler_phi(F.q, ((pi, v),))
        if len(set(out)) != want:
            raise DSError("local unit kernel has the wrong size")
        return sorted(set(out))

    def _frobenius_lift(self, pi: FieldPoly, v: int) -> int:
        """Code of an element congruent to pi away from pi and to 1 at pi."""
        piv = pi**v
        D = self._cofactor(pi, v)
        g, u, w = piv.xgcd(D)
        if g.degree != 0:
            raise DSError("modulus factors are not coprime")
        e1 = u * piv  # 1 mod D, 0 mod pi^v
        x = (FieldPoly.one(self.field) - e1 + pi * e1) % self.M
        return self._pack(list(x.coeffs))

    def infinity(self) -> tuple[int, int]:
        """(number of degree-1 places over t = infinity, their inertia)."""
        q = self.field.q
        consts = list(range(1, q))
        K = self._closure(list(self.hgens) + consts)
        e_inf = (q - 1) // sum(1 for c in consts if c in self.H)
        return self.order // len(K), e_inf

    # -- quotient structure -----------------------------------------------------

    def _quotient(self) -> _Quotient:
        if self._quot is not None:
            return self._quot
        reps = []
        index = {}
        repof = {}
        Hs = sorted(self.H)
        for code in self.members():
            if code in repof:
                continue
            index[code] = len(reps)
            reps.append(code)
            for h in Hs:
                repof[self.mul(code, h)] = code
        if len(repof) != self.order:
            raise DSError("coset sweep did not cover the group")
        ident = repof[1]

        def mulq(a, b):
            return repof[self.mul(a, b)]

        basis = _abelian_basis(reps, mulq, ident)
        orders = [n for _, n in basis]
        if math.prod(orders) != len(reps):
            raise DSError("basis orders do not multiply to the quotient size")
        exponent = orders[0] if orders else 1
        elems = [ident]
        tuples = [()]
        for b, n in basis:
            pows = [ident]
            for _ in range(n - 1):
                pows.append(mulq(pows[-1], b))
            elems2 = []
            tuples2 = []
            for e, tup in zip(elems, tuples):
                for j in range(n):
                    elems2.append(mulq(e, pows[j]))
                    tuples2.append(tup + (j,))
            elems, tuples = elems2, tuples2
        dl = dict(zip(elems, tuples))
        if len(dl) != len(reps):
            raise DSError("basis enumeration collided; group is not the direct sum")
        q = _Quotient(reps, index, repof, [b for b, _ in basis], orders, exponent, dl)
        object.__setattr__(self, "_quot", q)
        return q

    def _class_counts(self) -> list[list[int]]:
        """counts[n][i] = number of monic f of degree n coprime to M in the
        coset with canonical representative reps[i], for n < deg M."""
        if self._counts is not None:
            return self._counts
        Q = self._quotient()
        q = self.field.q
        out = []
        for n in range(self._n):
            row = [0] * len(Q.reps)
            lo = q**n
            # monic degree n: top digit 1, lower digits free
            for code in range(lo, 2 * lo) if n else [1]:
                rep = Q.repof.get(code)
                if rep is not None:
                    row[Q.index[rep]] += 1
            out.append(row)
        object.__setattr__(self, "_counts", out)
        return out


def _euler_phi(q: int, factors) -> int:
    out = 1
    for pi, v in factors:
        d = pi.degree
        out *= q ** (d * v) - q ** (d * (v - 1))
    return out


def _abelian_basis(elems: list[int], mul, ident: int) -> list[tuple[int, int]]:
    """Basis [(g, n)] with descending orders for a finite abelian group
    given by an element list and multiplication; deterministic."""
    m = len(elems)
    if m == 1:
        return []
    fac = factor_int(m)

    def powq(x, e):
        r = ident
        b = x
        while e:
            if e & 1:
                r = mul(r, b)
            b = mul(b, b)
            e >>= 1
        return r

    def order_of(x):
        o = m
        for p in fac:
            while o % p == 0 and powq(x, o // p) == ident:
                o //= p
        return o

    b, N = ident, 1
    for x in sorted(elems):
        o = order_of(x)
        if o > N:
            b, N = x, o
    if N == m:
        return [(b, N)]
    pows = [ident]
    for _ in range(N - 1):
        pows.append(mul(pows[-1], b))
    dl_b = {c: j for j, c in enumerate(pows)}
    if len(dl_b) != N:
        raise DSError("cyclic power table collided")
    repof = {}
    reps = []
    for x in sorted(elems):
        if x in repof:
            continue
        reps.append(x)
        for c in pows:
            repof[mul(x, c)] = x
    sub = _abelian_basis(reps, lambda a, c: repof[mul(a, c)], repof[ident])
    out = [(b, N)]
    for cbar, nbar in sub:
        z = powq(cbar, nbar)
        s = dl_b.get(z)
        if s is None or s % nbar:
            raise DSError("basis lift failed")
        lift = mul(cbar, pows[(-(s // nbar)) % N])
        if order_of(lift) != nbar:
            raise DSError("basis lift has the wrong order")
        out.append((lift, nbar))
    return out


def unit_group(M: FieldPoly, gens: Iterable[FieldPoly] = ()) -> ModulusGroup:
    """(F_q[t]/M)^* with the subgroup generated by gens (default trivial)."""
    return ModulusGroup(M, gens)


# ---------------------------------------------------------------------------
# the Carlitz action and torsion polynomials


def carlitz_action(M: FieldPoly) -> LinearizedPoly:
    """[M] as a skew polynomial over F_q[t]; [t] = tau + t."""
    F = M.field
    q = F.q
    if M.degree >= 1 and q**M.degree > _ACTION_CAP:
        raise SizeLimitError(f"q^deg M = {q**M.degree} exceeds {_ACTION_CAP}")
    one = FieldPoly.one(F)
    ct = LinearizedPoly(q, (FieldPoly.x(F), one))
    out = LinearizedPoly.zero(q)
    p = LinearizedPoly.identity(q, one)
    for c in M.coeffs:
        if c:
            out = out + p.scale(FieldPoly.const(F, c))
        p = ct * p
    return out


def carlitz_phi(M: FieldPoly) -> XPoly:
    """The M-th torsion polynomial Phi_M, by exact division of [M] by the
    Phi_Q over the proper monic divisors Q."""
    if not M.is_monic():
        raise InputError("torsion polynomial wants a monic modulus")
    if M.field.q**M.degree > _ACTION_CAP:
        raise SizeLimitError(
            f"q^deg M = {M.field.q**M.degree} exceeds {_ACTION_CAP}"
        )
    memo: dict[tuple, XPoly] = {}
    return _phi(M, memo)


def _phi(M: FieldPoly, memo: dict) -> XPoly:
    got = memo.get(M.coeffs)
    if got is not None:
        return got
    num = carlitz_action(M).to_xpoly()
    for Q in _proper_monic_divisors(M):
        num, r = divmod(num, _phi(Q, memo))
        if r:
            raise DSError("torsion polynomial division left a remainder")
    memo[M.coeffs] = num
    return num


def _proper_monic_divisors(M: FieldPoly) -> list[FieldPoly]:
    factors = M.factor()
    out = [FieldPoly.one(M.field)]
    for pi, v in factors:
        out = [d * pi**e for d in out for e in range(v + 1)]
    out = [d for d in out if d.degree < M.degree]
    out.sort(key=lambda d: (d.degree, d.code()))
    return out


# ---------------------------------------------------------------------------
# places


def residual_degree(pi: FieldPoly, G: ModulusGroup) -> int:
    """Residue degree over pi of the cover cut out by G/H: the order of the
    class of pi.  pi must be prime to the modulus."""
    if not pi.is_irreducible():
        raise InputError("residual degree wants an irreducible polynomial")
    r = (pi % G.M).coeffs
    if not G._is_unit_list(list(r)):
        raise InputError("prime divides the modulus; its Frobenius is not defined")
    x = G.reduce(pi)
    y = x
    f = 1
    while y not in G.H:
        y = G.mul(y, x)
        f += 1
        if f > G.index:
            raise DSError("Frobenius order exceeded the group index")
    return f


def place_counts(G: ModulusGroup, d_max: int, split: bool = False):
    """a_1..a_dmax for the quotient curve of G, as a list (a[0] unused is
    dropped: index i holds a_{i+1}).  With split=True, a dict of the
    unramified / ramified / infinite contributions plus their total."""
    if not 1 <= d_max <= 16:
        raise InputError("d_max must be between 1 and 16")
    F = G.field
    unram = [0] * (d_max + 1)
    ram = [0] * (d_max + 1)
    inf = [0] * (d_max + 1)

    n_inf, _ = G.infinity()
    inf[1] = n_inf

    ram_pis = {pi.coeffs for pi, _ in G.factors}
    for dp in range(1, d_max + 1):
        for pi in irreducibles(F, dp):
            if pi.coeffs in ram_pis:
                continue
            x = G.reduce(pi)
            y = x
            f = 1
            while f * dp <= d_max and y not in G.H:
                y = G.mul(y, x)
                f += 1
            if f * dp > d_max:
                continue
            g_count, rcheck = divmod(G.index, f)
            if rcheck:
                raise DSError("f g != [G:H] at an unramified prime")
            unram[f * dp] += g_count

    for pi, v in G.factors:
        I = G._embedded_local_units(pi, v)
        e = len(I) // sum(1 for x in I if x in G.H)
        D = G._cofactor(pi, v)
        if D.degree == 0:
            f = 1
        else:
            dl = list(D.coeffs)
            Hbar = {G._pack(fields.pl_rem(F, G._unpack(h), dl)) for h in G.H}
            pibar = fields.pl_rem(F, list(pi.coeffs), dl)
            y = pibar
            f = 1
            while G._pack(y) not in Hbar:
                y = fields.pl_mulmod(F, y, pibar, dl)
                f += 1
                if f > G.index:
                    raise DSError("ramified Frobenius order exceeded the index")
        g_count, rcheck = divmod(G.index, e * f)
        if rcheck:
            raise DSError("e f g != [G:H] at a ramified prime")
        if f * pi.degree <= d_max:
            ram[f * pi.degree] += g_count

    total = [u + r + i for u, r, i in zip(unram, ram, inf)]
    if split:
        return {
            "total": total[1:],
            "unramified": unram[1:],
            "ramified": ram[1:],
            "infinite": inf[1:],
        }
    return total[1:]


# ---------------------------------------------------------------------------
# characters and L-polynomials


def characters(G: ModulusGroup) -> Iterator[tuple[int, ...]]:
    """All nontrivial characters of G/H as exponent tuples against the
    computed basis, lexicographically."""
    Q = G._quotient()
    if not Q.orders:
        return
    idx = [0] * len(Q.orders)
    while True:
        k = len(idx) - 1
        while k >= 0:
            idx[k] += 1
            if idx[k] < Q.orders[k]:
                break
            idx[k] = 0
            k -= 1
        if k < 0:
            return
        yield tuple(idx)


def _char_exponents(G: ModulusGroup, chi: Sequence[int]) -> list[int]:
    """Character exponent (power of zeta_N) on each coset class."""
    Q = G._quotient()
    chi = tuple(int(c) for c in chi)
    if len(chi) != len(Q.orders):
        raise InputError(
            f"character wants {len(Q.orders)} exponents, got {len(chi)}"
        )
    if all(c % n == 0 for c, n in zip(chi, Q.orders)):
        raise InputError("character is trivial")
    N = Q.exponent
    out = []
    for rep in Q.reps:
        tup = Q.dl[rep]
        out.append(sum(c * e * (N // n) for c, e, n in zip(chi, tup, Q.orders)) % N)
    return out


def char_l_poly(G: ModulusGroup, chi: Sequence[int]) -> list[CycInt]:
    """The L-polynomial of a nontrivial character of G/H, ascending in T,
    with coefficients in Z[zeta_N].  Completed so that the product over
    all nontrivial characters is the zeta numerator of the curve."""
    if G.M.degree > _PHI_DEG_CAP:
        raise InputError(f"character L wants deg M <= {_PHI_DEG_CAP}")
    Q = G._quotient()
    N = Q.exponent
    exps = _char_exponents(G, chi)
    counts = G._class_counts()
    zero = CycInt.integer(N, 0)
    L = []
    for n in range(G.M.degree):
        acc = zero
        for i, c in enumerate(counts[n]):
            if c:
                acc = acc + c * CycInt.root(N, exps[i])
        L.append(acc)
    if L[0] != 1:
        raise DSError("L-series does not start at 1")
    L = _cp_trim(L)

    # restore Euler factors at primes dividing M but not the conductor
    for pi, v in G.factors:
        V = G._embedded_local_units(pi, v)
        if all(exps[Q.index[Q.repof[x]]] == 0 for x in V):
            u = CycInt.root(N, exps[Q.index[Q.repof[G._frobenius_lift(pi, v)]]])
            L = _cp_div_unit(L, u, pi.degree)

    # a character trivial on the constants is unramified at infinity, where
    # the places all have degree one; the Artin factor there eats the zero
    # of the finite sum at T = 1
    consts = [c for c in range(1, G.field.q)]
    if all(exps[Q.index[Q.repof[c]]] == 0 for c in consts):
        L = _cp_div_unit(L, CycInt.integer(N, 1), 1)
    return L


def zeta_numerator(G: ModulusGroup) -> ZetaData:
    """Zeta numerator of the quotient curve of G, as ZetaData, from the
    product of the completed character L-polynomials."""
    if G.index * G.M.degree > _ZETA_CAP:
        raise SizeLimitError(
            f"[G:H] deg M = {G.index * G.M.degree} exceeds {_ZETA_CAP}"
        )
    Q = G._quotient()
    N = Q.exponent
    P = [CycInt.integer(N, 1)]
    for chi in characters(G):
        P = _cp_mul(P, char_l_poly(G, chi))
    ints = [c.as_int() for c in P]
    if len(ints) % 2 == 0:
        raise DSError("zeta numerator has odd degree")
    g = (len(ints) - 1) // 2
    return ZetaData(G.field.q, g, ints)


# ---------------------------------------------------------------------------
# vanishing criteria


def ds_criterion_51(G: ModulusGroup, ell: int) -> bool:
    """Sufficient criterion for a_ell = 0, hence for the points of the
    quotient curve not to grow from F_q to F_{q^ell}: no factor of M of
    degree 1 or ell, no degree-1 prime with Frobenius of order ell, and
    no degree-ell prime with Frobenius in H."""
    if not is_prime(ell):
        raise InputError("the extension degree must be prime")
    if G.field.q**ell > 2**20:
        raise SizeLimitError(f"cannot sweep the degree-{ell} primes at q = {G.field.q}")
    for pi, _ in G.factors:
        if pi.degree in (1, ell):
            return False
    for pi in irreducibles(G.field, 1):
        x = G.reduce(pi)
        # ell prime, so the class has order ell iff x is outside H
        # while x^ell lands in it
        if x not in G.H and G.pow(x, ell) in G.H:
            return False
    for pi in irreducibles(G.field, ell):
        if G.reduce(pi) in G.H:
            return False
    return True


def _ramified_f(G: ModulusGroup, pi: FieldPoly, v: int) -> int:
    F = G.field
    D = G._cofactor(pi, v)
    if D.degree == 0:
        return 1
    dl = list(D.coeffs)
    Hbar = {G._pack(fields.pl_rem(F, G._unpack(h), dl)) for h in G.H}
    pibar = fields.pl_rem(F, list(pi.coeffs), dl)
    y = pibar
    f = 1
    while G._pack(y) not in Hbar:
        y = fields.pl_mulmod(F, y, pibar, dl)
        f += 1
        if f > G.index:
            raise DSError("ramified Frobenius order exceeded the index")
    return f


def zero_places_52(G: ModulusGroup, k: int) -> bool:
    """Whether the vanishing criterion for subgroups of the constants
    proves a_k = 0: needs H inside F_q^*, 2 <= k < deg M, and k avoiding
    deg(pi) * f_pi at every prime dividing M."""
    if any(h >= G.field.q for h in G.H):
        raise InputError("criterion wants the subgroup inside the constants")
    if not 2 <= k < G.M.degree:
        raise InputError("criterion covers 2 <= k < deg M only")
    for pi, v in G.factors:
        if k == pi.degree * _ramified_f(G, pi, v):
            return False
    return True


def zero_places_52_range(G: ModulusGroup) -> list[int]:
    """All k in [2, deg M) where zero_places_52 proves a_k = 0."""
    return [k for k in range(2, G.M.degree) if zero_places_52(G, k)]
