"""Per-field lookup tables backing the affine scan kernels."""

from __future__ import annotations

import numpy as np

from ..fields import FiniteField

__all__ = ["ScanTables", "scan_tables"]


class ScanTables:
    """exp/log tables over a field's integer codes, plus the character data
    the hyperelliptic scans need.

    EXP has length 2(q - 1) so a sum of two logs indexes it directly.
    LOG[0] is -1; kernels mask zero operands instead of branching on the
    sentinel.  In characteristic 2 the absolute trace of a code is the
    parity of code & trmask (trace is F_2-linear and codes are bit
    vectors); odd characteristic gets the quadratic character CHI as a
    table, with CHI[0] = 0.
    """

    __slots__ = ("field", "Q", "EXP", "LOG", "CHI", "trmask")

    def __init__(self, E: FiniteField):
        Q = E.q
        g = E.multiplicative_generator()
        EXP = np.empty(2 * (Q - 1), dtype=np.int64)
        acc = 1
        mul = E.mul
        for i in range(Q - 1):
            EXP[i] = acc
            acc = mul(acc, g)
        assert acc == 1
        EXP[Q - 1 :] = EXP[: Q - 1]
        LOG = np.empty(Q, dtype=np.int64)
        LOG[0] = -1
        LOG[EXP[: Q - 1]] = np.arange(Q - 1, dtype=np.int64)
        object.__setattr__(self, "field", E)
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "EXP", EXP)
        object.__setattr__(self, "LOG", LOG)
        if E.p == 2:
            mask = 0
            for b in range(E.kabs):
                if E.trace_abs(1 << b):
                    mask |= 1 << b
            object.__setattr__(self, "trmask", mask)
            object.__setattr__(self, "CHI", np.zeros(1, dtype=np.int64))
        else:
            CHI = np.zeros(Q, dtype=np.int64)
            CHI[EXP[: Q - 1]] = 1
            CHI[EXP[1 : Q - 1 : 2]] = -1
            object.__setattr__(self, "CHI", CHI)
            object.__setattr__(self, "trmask", 0)

    def __setattr__(self, *a):
        raise AttributeError("ScanTables is immutable")


_CACHE: dict[int, ScanTables] = {}


def scan_tables(E: FiniteField) -> ScanTables:
    """Tables for E, built once per field object (fields are cached too)."""
    t = _CACHE.get(id(E))
    if t is None:
        t = ScanTables(E)
        _CACHE[id(E)] = t
    return t
