"""Finite fields with plain-integer element codes.

A field is a context object; elements are ints in ``range(q)``.  Prime
fields store residues.  An extension of relative degree d over a base
field B packs the coefficient vector (c_0, ..., c_{d-1}), c_i in B, as
``sum(c_i * B.q**i)``.  Towers built with :func:`extension_field` keep
base-field codes valid as constants, so the embedding F -> E is the
identity on codes; that property is what lets point-counting tables and
curve coefficients move between a field and its extensions without any
translation step.

Characteristic-2 codes add by XOR at every tower level, because base-q
digit boundaries align with bit boundaries when q is a power of 2.
"""

from __future__ import annotations

import functools

from .errors import InputError

__all__ = [
    "FiniteField",
    "make_field",
    "extension_field",
    "field_from_order",
    "is_prime",
    "factor_int",
    "mobius",
    "prime_powers",
]


# ---------------------------------------------------------------------------
# integer helpers (no sympy: import cost dwarfs the ~60 lines we need)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24 with these bases
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # Brent variant; n odd composite, not a prime power of a small prime
    import random

    rng = random.Random(0xD5C0)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                import math

                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                import math

                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}, pure trial + Pollard rho."""
    if n < 1:
        raise InputError(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f < 1 << 16:
        if n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        else:
            f += wheel[i]
            i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


def mobius(n: int) -> int:
    if n < 1:
        raise InputError(f"mobius of {n}")
    if n == 1:
        return 1
    fac = factor_int(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def prime_powers(bound: int):
    """Yield (q, p, k) for all prime powers q = p**k <= bound, ascending in q."""
    if bound < 2:
        return
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    out = []
    for p in range(2, bound + 1):
        if not sieve[p]:
            continue
        q, k = p, 1
        while q <= bound:
            out.append((q, p, k))
            q *= p
            k += 1
    out.sort()
    yield from out


# ---------------------------------------------------------------------------
# dense polynomial lists over a field context
#
# Coefficients ascending, no trailing zeros (zero poly == []).  These are the
# raw engine shared by field construction and the FieldPoly wrapper.


def pl_trim(u: list) -> list:
    while u and u[-1] == 0:
        u.pop()
    return u


def pl_add(F, u, v):
    n = max(len(u), len(v))
    out = [0] * n
    for i in range(n):
        a = u[i] if i < len(u) else 0
        b = v[i] if i < len(v) else 0
        out[i] = F.add(a, b)
    return pl_trim(out)


def pl_neg(F, u):
    return [F.neg(a) for a in u]


def pl_sub(F, u, v):
    return pl_add(F, u, pl_neg(F, v))


def pl_mul(F, u, v):
    if not u or not v:
        return []
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            if b:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return pl_trim(out)


def pl_scale(F, u, c):
    if c == 0:
        return []
    return [F.mul(a, c) for a in u]


def pl_divmod(F, u, v):
    if not v:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(u)
    dv = len(v) - 1
    lead_inv = F.inv(v[-1])
    q = [0] * max(0, len(r) - dv)
    while len(r) - 1 >= dv and r:
        c = F.mul(r[-1], lead_inv)
        k = len(r) - 1 - dv
        q[k] = c
        for i, b in enumerate(v):
            if b:
                r[k + i] = F.sub(r[k + i], F.mul(c, b))
        pl_trim(r)
    return pl_trim(q), r


def pl_rem(F, u, v):
    return pl_divmod(F, u, v)[1]


def pl_monic(F, u):
    if not u or u[-1] == 1:
        return list(u)
    return pl_scale(F, u, F.inv(u[-1]))


def pl_gcd(F, u, v):
    a, b = list(u), list(v)
    while b:
        a, b = b, pl_rem(F, a, b)
    return pl_monic(F, a)


def pl_mulmod(F, u, v, m):
    return pl_rem(F, pl_mul(F, u, v), m)


def pl_powmod(F, u, e: int, m):
    if e < 0:
        raise InputError("negative exponent")
    r = [1]
    b = pl_rem(F, u, m)
    while e:
        if e & 1:
            r = pl_mulmod(F, r, b, m)
        b = pl_mulmod(F, b, b, m)
        e >>= 1
    return r


def pl_eval(F, u, x):
    acc = 0
    for c in reversed(u):
        acc = F.add(F.mul(acc, x), c)
    return acc


def pl_deriv(F, u):
    # codes < p denote prime-subfield constants at every tower level
    out = []
    for i in range(1, len(u)):
        k = i % F.p
        out.append(F.mul(u[i], k) if k and u[i] else 0)
    return pl_trim(out)


# ---------------------------------------------------------------------------
# Conway polynomials, ascending coefficients, for p**k <= 64 with k >= 2.
# Verified irreducible + primitive at first use; beyond the table we fall
# back to the lexicographically least primitive polynomial, which is the
# same selection rule these satisfy.

_CONWAY = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
}


class FiniteField:
    """Arithmetic context for GF(q); elements are ints in range(q).

    Do not construct directly: :func:`make_field` and
    :func:`extension_field` cache and verify instances.
    """

    __slots__ = (
        "p",
        "deg",
        "q",
        "base",
        "modulus",
        "symbol",
        "kabs",
        "_mod_mask",
        "_gen",
    )

    def __init__(self, p, deg, base, modulus, symbol):
        self.p = p
        self.deg = deg
        self.base = base
        self.modulus = None if modulus is None else tuple(modulus)
        self.symbol = symbol
        if base is None:
            self.q = p
            self.kabs = 1
        else:
            self.q = base.q**deg
            self.kabs = base.kabs * deg
        self._gen = None
        self._mod_mask = None
        if base is not None and base.base is None and p == 2:
            # prime-base char-2 tower level: carryless multiply path
            mask = 0
            for i, c in enumerate(self.modulus):
                if c:
                    mask |= 1 << i
            self._mod_mask = mask

    # -- structure ---------------------------------------------------------

    def __repr__(self):
        if self.base is None:
            return f"GF({self.q})"
        return f"GF({self.q})"

    def elements(self):
        return range(self.q)

    def digits(self, a: int) -> tuple:
        """Coefficient vector of a over the base field, ascending, length deg."""
        if self.base is None:
            return (a,)
        bq = self.base.q
        out = []
        for _ in range(self.deg):
            a, r = divmod(a, bq)
            out.append(r)
        return tuple(out)

    def undigits(self, ds) -> int:
        if self.base is None:
            return ds[0] % self.p
        bq = self.base.q
        a = 0
        for c in reversed(list(ds)):
            a = a * bq + c
        return a

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.base is None:
            return (a + b) % self.p
        bq = self.base.q
        out, mult = 0, 1
        B = self.base
        for _ in range(self.deg):
            a, ra = divmod(a, bq)
            b, rb = divmod(b, bq)
            out += B.add(ra, rb) * mult
            mult *= bq
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.base is None:
            return (-a) % self.p
        bq = self.base.q
        out, mult = 0, 1
        B = self.base
        while a:
            a, r = divmod(a, bq)
            out += B.neg(r) * mult
            mult *= bq
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.base is None:
            return a * b % self.p
        if self._mod_mask is not None:
            k = self.deg
            m = self._mod_mask
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if (a >> k) & 1:
                    a ^= m
            return r
        da = self.digits(a)
        db = self.digits(b)
        B = self.base
        conv = [0] * (2 * self.deg - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                if y:
                    conv[i + j] = B.add(conv[i + j], B.mul(x, y))
        # reduce by the monic modulus
        mod = self.modulus
        d = self.deg
        for i in range(len(conv) - 1, d - 1, -1):
            c = conv[i]
            if c == 0:
                continue
            conv[i] = 0
            for j in range(d):
                if mod[j]:
                    conv[i - d + j] = B.sub(conv[i - d + j], B.mul(c, mod[j]))
        return self.undigits(conv[:d])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        e %= self.q - 1
        r, b = 1, a
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.base is None:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def trace_abs(self, a: int) -> int:
        """Absolute trace down to the prime field (result is a code < p)."""
        t = a
        s = a
        for _ in range(self.kabs - 1):
            t = self.pow(t, self.p)
            s = self.add(s, t)
        return s

    def multiplicative_generator(self) -> int:
        if self._gen is not None:
            return self._gen
        if self.q == 2:
            self._gen = 1
            return 1
        rads = list(factor_int(self.q - 1))

        def ok(g):
            return all(self.pow(g, (self.q - 1) // r) != 1 for r in rads)

        if self.base is not None and ok(self.base.q):
            # the adjoined root; always primitive for Conway moduli
            self._gen = self.base.q
            return self._gen
        for g in range(2, self.q):
            if ok(g):
                self._gen = g
                return g
        raise AssertionError("no generator found (unreachable in a field)")


# ---------------------------------------------------------------------------
# construction with verification


def _is_irreducible_list(B: FiniteField, f: list) -> bool:
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    xq = pl_powmod(B, x, B.q**d, f)
    if pl_sub(B, xq, x):
        return False
    for ell in factor_int(d):
        g = pl_powmod(B, x, B.q ** (d // ell), f)
        if len(pl_gcd(B, pl_sub(B, g, x), f)) != 1:
            return False
    return True


def _is_primitive_list(B: FiniteField, f: list) -> bool:
    d = len(f) - 1
    n = B.q**d - 1
    if pl_eval(B, f, 0) == 0:
        return False
    for r in factor_int(n):
        if pl_powmod(B, [0, 1], n // r, f) == [1]:
            return False
    return True


_FIELD_CACHE: dict = {}


def make_field(p: int, k: int = 1) -> FiniteField:
    """GF(p**k) with the package's canonical defining polynomial.

    k == 1 gives the prime field.  For k >= 2 the modulus is the Conway
    polynomial where tabulated (checked at first use), else the
    lexicographically least primitive monic polynomial of degree k, where
    "lexicographically least" orders by the integer code sum(c_i * p**i).
    """
    key = ("prime_tower", p, k)
    F = _FIELD_CACHE.get(key)
    if F is not None:
        return F
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if k < 1:
        raise InputError("degree must be >= 1")
    if k == 1:
        F = FiniteField(p, 1, None, None, None)
    else:
        prime = make_field(p, 1)
        coeffs = _CONWAY.get((p, k))
        if coeffs is not None:
            f = list(coeffs)
            if not (_is_irreducible_list(prime, f) and _is_primitive_list(prime, f)):
                raise AssertionError(f"bad table entry for GF({p}^{k})")
        else:
            f = None
            for code in range(p**k):
                cand = []
                a = code
                for _ in range(k):
                    a, r = divmod(a, p)
                    cand.append(r)
                cand.append(1)
                if _is_irreducible_list(prime, cand) and _is_primitive_list(prime, cand):
                    f = cand
                    break
            if f is None:
                raise AssertionError("no primitive polynomial found (unreachable)")
        F = FiniteField(p, k, prime, f, "a")
    _FIELD_CACHE[key] = F
    return F


def extension_field(F: FiniteField, m: int) -> FiniteField:
    """Degree-m extension of F as a tower level over F.

    The modulus is the lexicographically least monic irreducible of degree
    m over F; constants of F keep their codes in the extension.
    """
    if m < 1:
        raise InputError("extension degree must be >= 1")
    if m == 1:
        return F
    key = ("ext", id(F), m)
    E = _FIELD_CACHE.get(key)
    if E is not None:
        return E
    f = None
    for code in range(F.q**m):
        cand = []
        a = code
        for _ in range(m):
            a, r = divmod(a, F.q)
            cand.append(r)
        cand.append(1)
        if _is_irreducible_list(F, cand):
            f = cand
            break
    if f is None:
        raise AssertionError("no irreducible polynomial found (unreachable)")
    sym = "a" if F.symbol is None else chr(ord(F.symbol) + 1)
    E = FiniteField(F.p, m, F, f, sym)
    _FIELD_CACHE[key] = E
    return E


def field_from_order(q: int) -> FiniteField:
    """GF(q) for a prime power q, via make_field."""
    if q < 2:
        raise InputError(f"{q} is not a prime power")
    fac = factor_int(q)
    if len(fac) != 1:
        raise InputError(f"{q} is not a prime power")
    (p, k), = fac.items()
    return make_field(p, k)
