"""Scan kernels over field codes: numba-compiled when available, numpy else.

Setting DSCURVES_NO_NUMBA=1 forces the numpy path; BACKEND names the one
that is live.  Every kernel takes the exp/log tables from scantables and
works on int64 codes.  Zero operands are masked, never special-cased via
LOG[0] (which is -1, a harmless wrap index into EXP).

Besides the hyperelliptic affine scans there are dense polynomial
mulmod/powmod kernels over a scan-tabled field; the test suite uses them
to factor reductions of large additive polynomials independently of the
exact machinery.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "BACKEND",
    "hyp2_affine",
    "hypodd_affine",
    "poly_mulmod",
    "poly_powmod",
    "variants",
]


# ---------------------------------------------------------------------------
# numpy implementations


def _popcount(v):
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(v).astype(np.int64)
    # SWAR popcount, 64-bit
    v = v.astype(np.uint64)
    v = v - ((v >> np.uint64(1)) & np.uint64(0x5555555555555555))
    v = (v & np.uint64(0x3333333333333333)) + (
        (v >> np.uint64(2)) & np.uint64(0x3333333333333333)
    )
    v = (v + (v >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return ((v * np.uint64(0x0101010101010101)) >> np.uint64(56)).astype(np.int64)


def _mul_vec(a, b, EXP, LOG):
    r = EXP[LOG[a] + LOG[b]]
    return np.where((a == 0) | (b == 0), 0, r)


def _mul_sc(a, c, EXP, LOG):
    if c == 0:
        return np.zeros_like(a)
    r = EXP[LOG[a] + int(LOG[c])]
    return np.where(a == 0, 0, r)


def _add_mod(a, b, p, k):
    out = 0
    pw = 1
    for _ in range(k):
        out = out + (((a // pw) + (b // pw)) % p) * pw
        pw *= p
    return out


def _hyp2_numpy(fco, hco, EXP, LOG, Q, trmask):
    X = np.arange(Q, dtype=np.int64)
    vf = np.full(Q, fco[-1], dtype=np.int64)
    for i in range(len(fco) - 2, -1, -1):
        vf = _mul_vec(vf, X, EXP, LOG) ^ fco[i]
    vh = np.full(Q, hco[-1], dtype=np.int64)
    for i in range(len(hco) - 2, -1, -1):
        vh = _mul_vec(vh, X, EXP, LOG) ^ hco[i]
    hz = vh == 0
    inv = EXP[(Q - 1) - LOG[np.where(hz, 1, vh)]]
    w = _mul_vec(vf, _mul_vec(inv, inv, EXP, LOG), EXP, LOG)
    even = (_popcount(w & trmask) & 1) == 0
    return int(np.count_nonzero(hz) + 2 * np.count_nonzero(~hz & even))


def _hypodd_numpy(fco, hco, EXP, LOG, CHI, Q, p, k, inv4):
    X = np.arange(Q, dtype=np.int64)
    vf = np.full(Q, fco[-1], dtype=np.int64)
    for i in range(len(fco) - 2, -1, -1):
        vf = _add_mod(_mul_vec(vf, X, EXP, LOG), fco[i], p, k)
    vh = np.full(Q, hco[-1], dtype=np.int64)
    for i in range(len(hco) - 2, -1, -1):
        vh = _add_mod(_mul_vec(vh, X, EXP, LOG), hco[i], p, k)
    h2 = _mul_vec(vh, vh, EXP, LOG)
    w = _add_mod(vf, _mul_sc(h2, inv4, EXP, LOG), p, k)
    return int(Q + CHI[w].sum())


def _poly_mulmod_numpy(a, b, mod, EXP, LOG, Q, p, k):
    la, lb = len(a), len(b)
    out = np.zeros(la + lb - 1, dtype=np.int64)
    for i in range(la):
        c = int(a[i])
        if c:
            out[i : i + lb] = _add_mod(out[i : i + lb], _mul_sc(b, c, EXP, LOG), p, k)
    dm = len(mod) - 1
    lead_inv = int(EXP[(Q - 1) - LOG[mod[dm]]]) if mod[dm] != 1 else 1
    for j in range(len(out) - 1, dm - 1, -1):
        c = int(out[j])
        if c == 0:
            continue
        if lead_inv != 1:
            c = int(EXP[(LOG[c] + LOG[lead_inv]) % (Q - 1)])
        out[j] = 0
        negc = _neg_code(c, p, k)
        out[j - dm : j] = _add_mod(
            out[j - dm : j], _mul_sc(mod[:dm], negc, EXP, LOG), p, k
        )
    return out[:dm] if len(out) >= dm else np.concatenate(
        [out, np.zeros(dm - len(out), dtype=np.int64)]
    )


def _neg_code(c, p, k):
    out = 0
    pw = 1
    for _ in range(k):
        out += ((p - (c // pw) % p) % p) * pw
        pw *= p
    return out


# ---------------------------------------------------------------------------
# numba twins; scalar loops over the same tables


def _hyp2_loop(fco, hco, EXP, LOG, Q, trmask):
    n = 0
    nf = len(fco)
    nh = len(hco)
    for x in range(Q):
        vf = fco[nf - 1]
        for i in range(nf - 2, -1, -1):
            if vf != 0 and x != 0:
                vf = EXP[LOG[vf] + LOG[x]]
            else:
                vf = 0
            vf ^= fco[i]
        vh = hco[nh - 1]
        for i in range(nh - 2, -1, -1):
            if vh != 0 and x != 0:
                vh = EXP[LOG[vh] + LOG[x]]
            else:
                vh = 0
            vh ^= hco[i]
        if vh == 0:
            n += 1
        else:
            if vf == 0:
                w = 0
            else:
                inv = EXP[Q - 1 - LOG[vh]]
                sq = EXP[LOG[inv] + LOG[inv]]
                w = EXP[LOG[vf] + LOG[sq]]
            v = w & trmask
            bits = 0
            while v:
                v &= v - 1
                bits += 1
            if bits & 1 == 0:
                n += 2
    return n


def _hypodd_loop(fco, hco, EXP, LOG, CHI, Q, p, k, inv4):
    n = 0
    nf = len(fco)
    nh = len(hco)
    for x in range(Q):
        vf = fco[nf - 1]
        for i in range(nf - 2, -1, -1):
            if vf != 0 and x != 0:
                vf = EXP[LOG[vf] + LOG[x]]
            else:
                vf = 0
            c = fco[i]
            out = 0
            pw = 1
            for _ in range(k):
                out += (((vf // pw) + (c // pw)) % p) * pw
                pw *= p
            vf = out
        vh = hco[nh - 1]
        for i in range(nh - 2, -1, -1):
            if vh != 0 and x != 0:
                vh = EXP[LOG[vh] + LOG[x]]
            else:
                vh = 0
            c = hco[i]
            out = 0
            pw = 1
            for _ in range(k):
                out += (((vh // pw) + (c // pw)) % p) * pw
                pw *= p
            vh = out
        if vh != 0:
            h2 = EXP[LOG[vh] + LOG[vh]]
            if h2 != 0 and inv4 != 0:
                h2 = EXP[LOG[h2] + LOG[inv4]]
            else:
                h2 = 0
        else:
            h2 = 0
        out = 0
        pw = 1
        for _ in range(k):
            out += (((vf // pw) + (h2 // pw)) % p) * pw
            pw *= p
        n += 1 + CHI[out]
    return n


def _poly_mulmod_loop(a, b, mod, EXP, LOG, Q, p, k):
    la = len(a)
    lb = len(b)
    out = np.zeros(la + lb - 1, dtype=np.int64)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(lb):
            bj = b[j]
            if bj == 0:
                continue
            t = EXP[LOG[ai] + LOG[bj]]
            cur = out[i + j]
            acc = 0
            pw = 1
            for _ in range(k):
                acc += (((cur // pw) + (t // pw)) % p) * pw
                pw *= p
            out[i + j] = acc
    dm = len(mod) - 1
    for j in range(len(out) - 1, dm - 1, -1):
        c = out[j]
        if c == 0:
            continue
        if mod[dm] != 1:
            c = EXP[(LOG[c] + (Q - 1 - LOG[mod[dm]])) % (Q - 1)]
        out[j] = 0
        for i in range(dm):
            mi = mod[i]
            if mi == 0:
                continue
            t = EXP[LOG[c] + LOG[mi]]
            neg = 0
            pw = 1
            for _ in range(k):
                neg += ((p - (t // pw) % p) % p) * pw
                pw *= p
            cur = out[j - dm + i]
            acc = 0
            pw = 1
            for _ in range(k):
                acc += (((cur // pw) + (neg // pw)) % p) * pw
                pw *= p
            out[j - dm + i] = acc
    res = np.zeros(dm, dtype=np.int64)
    for i in range(min(dm, len(out))):
        res[i] = out[i]
    return res


# ---------------------------------------------------------------------------
# backend wiring

_IMPLS = {
    "numpy": {
        "hyp2": _hyp2_numpy,
        "hypodd": _hypodd_numpy,
        "mulmod": _poly_mulmod_numpy,
    }
}

BACKEND = "numpy"
if not os.environ.get("DSCURVES_NO_NUMBA"):
    try:
        from numba import njit  # type: ignore

        _IMPLS["numba"] = {
            "hyp2": njit(cache=True)(_hyp2_loop),
            "hypodd": njit(cache=True)(_hypodd_loop),
            "mulmod": njit(cache=True)(_poly_mulmod_loop),
        }
        BACKEND = "numba"
    except ImportError:
        pass


def variants() -> dict:
    """The available backend implementations, keyed by name."""
    return {name: dict(impl) for name, impl in _IMPLS.items()}


def hyp2_affine(fco, hco, EXP, LOG, Q, trmask) -> int:
    """Affine points of y^2 + h y = f over the tabled characteristic-2 field."""
    return int(_IMPLS[BACKEND]["hyp2"](fco, hco, EXP, LOG, Q, trmask))


def hypodd_affine(fco, hco, EXP, LOG, CHI, Q, p, k, inv4) -> int:
    """Affine points of y^2 + h y = f over the tabled odd-order field."""
    return int(_IMPLS[BACKEND]["hypodd"](fco, hco, EXP, LOG, CHI, Q, p, k, inv4))


def poly_mulmod(a, b, mod, EXP, LOG, Q, p, k):
    """a * b mod the given polynomial, all as ascending int64 code arrays."""
    return _IMPLS[BACKEND]["mulmod"](a, b, mod, EXP, LOG, Q, p, k)


def poly_powmod(base, e, mod, EXP, LOG, Q, p, k):
    """base ** e mod the given polynomial via square and multiply."""
    one = np.array([1], dtype=np.int64)
    r = np.zeros(len(mod) - 1, dtype=np.int64)
    r[0] = 1
    b = poly_mulmod(base, one, mod, EXP, LOG, Q, p, k)
    while e:
        if e & 1:
            r = poly_mulmod(r, b, mod, EXP, LOG, Q, p, k)
        e >>= 1
        if e:
            b = poly_mulmod(b, b, mod, EXP, LOG, Q, p, k)
    return r
