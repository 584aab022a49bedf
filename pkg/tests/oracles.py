"""Independent recomputation routes used to cross-check library results.

The Carlitz place-count oracle takes the factoring route: reduce the
torsion polynomial of M at each unramified prime pi and read the place
degrees off the distinct-degree splitting of the reduction, instead of
computing orders in the unit group of F_q[t]/M.  Ramified and infinite
contributions have no factoring analogue here, so only the unramified
part is compared through this route.
"""

from __future__ import annotations

from dscurves.carlitz import carlitz_phi
from dscurves.fields import FiniteField, extension_field
from dscurves.fpoly import FieldPoly, irreducibles


def _root_in_extension(pi: FieldPoly, E: FiniteField) -> int:
    """A root of pi in E, by scanning; E must split pi."""
    F = pi.field
    m = E.kabs // F.kabs

    def embed(c: int) -> int:
        return E.undigits([c] + [0] * (m - 1))

    for x in range(E.q):
        acc = 0
        for c in reversed(pi.coeffs):
            acc = E.add(E.mul(acc, x), embed(c))
        if acc == 0:
            return x
    raise AssertionError(f"{pi} has no root in the degree-{m} extension")


def _reduce_at(phi_terms, E: FiniteField, theta: int, m: int) -> FieldPoly:
    """The torsion polynomial with t sent to theta, dense over E."""
    def embed(c: int) -> int:
        return E.undigits([c] + [0] * (m - 1))

    out = [0] * (max(phi_terms) + 1)
    for e, c in phi_terms.items():
        acc = 0
        for cc in reversed(c.coeffs):
            acc = E.add(E.mul(acc, theta), embed(cc))
        out[e] = acc
    return FieldPoly(E, out)


def carlitz_unramified_places(M: FieldPoly, d_max: int) -> list[int]:
    """a_1..a_dmax of the full Carlitz cover of M restricted to places
    over unramified finite primes, via factoring the torsion polynomial.

    A prime pi of degree d with pi not dividing M is unramified; the
    places above it of degree d*f correspond to the irreducible factors
    of Phi_M mod pi, all of degree f.  Factor counts come from
    distinct-degree splitting over the residue field.
    """
    F = M.field
    phi = carlitz_phi(M.monic())
    out = [0] * (d_max + 1)
    for d in range(1, d_max + 1):
        E = extension_field(F, d)
        x = FieldPoly.x(E)
        for pi in irreducibles(F, d):
            if not M % pi:
                continue
            theta = _root_in_extension(pi, E)
            rem = _reduce_at(phi.terms, E, theta, d)
            v = x
            f = 1
            while rem.degree > 0 and f * d <= d_max:
                v = v.powmod(E.q, rem)
                g = rem.gcd(v - x)
                if g.degree > 0:
                    count, exact = divmod(g.degree, f)
                    assert exact == 0, "mixed factor degree under the gcd"
                    out[f * d] += count
                    rem = rem // g
                    v = v % rem if rem.degree > 0 else v
                f += 1
    return out[1:]
