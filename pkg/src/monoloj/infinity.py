"""Newton nondegeneracy at infinity for plane polynomial maps, and finite-minimum evaluators.

Faces use the min convention over positive weights ``w``: ``f_w`` keeps the terms
of ``f`` on which ``<w, alpha>`` is smallest, and ``Γ(F)`` includes the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .arith import InvalidInput, UnsupportedDimension, dot
from .geometry import NewtonPolyhedron, polyhedron_from_points


@dataclass(frozen=True)
class PolyMap:
    n: int
    components: tuple[tuple[tuple[tuple[int, ...], Fraction], ...], ...]

    def __post_init__(self):
        comps = []
        for comp in self.components:
            terms = {}
            for exp, c in (comp.items() if isinstance(comp, dict) else comp):
                exp = tuple(int(e) for e in exp)
                if len(exp) != self.n or any(e < 0 for e in exp):
                    raise InvalidInput(f"bad exponent {exp}")
                terms[exp] = terms.get(exp, Fraction(0)) + Fraction(c)
            terms = {e: c for e, c in terms.items() if c != 0}
            if not terms:
                raise InvalidInput("zero component")
            comps.append(tuple(sorted(terms.items())))
        if not comps:
            raise InvalidInput("a polynomial map needs at least one component")
        object.__setattr__(self, "components", tuple(comps))

    def support(self, j: int) -> list[tuple[int, ...]]:
        return [e for e, _ in self.components[j]]


def gamma_infinity(f: PolyMap) -> NewtonPolyhedron:
    """``conv(union of supports, 0) + orthant``."""
    pts = {tuple([0] * f.n)}
    for j in range(len(f.components)):
        pts.update(f.support(j))
    return polyhedron_from_points(pts)


def face(comp, w: Sequence[int]):
    """Terms of a component attaining ``min <w, alpha>``."""
    m = min(dot(w, e) for e, _ in comp)
    return [(e, c) for e, c in comp if dot(w, e) == m]


# -- univariate polynomials over Q, coefficient lists low degree first -------------


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def poly_rem(a: list, b: list) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a = _trim(a)
    return a


def poly_gcd(a: list, b: list) -> list:
    """Monic gcd by the Euclidean algorithm (gcd(0, 0) = 0 as the empty list)."""
    a, b = _trim([Fraction(c) for c in a]), _trim([Fraction(c) for c in b])
    while b:
        a, b = b, poly_rem(a, b)
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def poly_eval(p: Sequence, z) -> Fraction:
    out = Fraction(0)
    for c in reversed(p):
        out = out * z + c
    return out


def edge_polynomial(terms, w: Sequence[int]) -> list:
    """Write a face along ``w`` as ``x^alpha0 * p(z)``, ``z = x^{d}``, ``d = (w2, -w1)``; return ``p``.

    ``alpha0`` is the end of the face with the least ``z``-power, so ``p(0) != 0``.
    """
    w2 = w[1]
    # alpha = alpha0 + k (w2, -w1); the x-exponent grows by w2 per step
    base = min(e[0] for e, _ in terms)
    coeffs = {}
    for e, c in terms:
        k, r = divmod(e[0] - base, w2)
        assert r == 0
        coeffs[k] = Fraction(c)
    return [coeffs.get(i, Fraction(0)) for i in range(max(coeffs) + 1)]


def _positive_edge_normals(comp) -> list[tuple[int, ...]]:
    pts = [e for e, _ in comp]
    if len(pts) < 2:
        return []
    poly = polyhedron_from_points(pts)
    return [f.normal for f in poly.compact_facets]


@dataclass(frozen=True)
class Nondegeneracy:
    nondegenerate: bool
    offending_w: Optional[tuple[int, int]]
    tested: tuple[tuple[int, int], ...]
    gcd: Optional[tuple[Fraction, ...]] = None


def nondegenerate_at_infinity(f: PolyMap) -> Nondegeneracy:
    """Decide the face condition for every positive weight (two variables).

    Away from the finitely many edge normals every face is a monomial, which has
    no torus zero. On an edge normal ``w`` the faces share the variable
    ``z = x^{w2} y^{-w1}``, and a common torus zero exists iff the stripped
    edge polynomials have a nonconstant gcd.
    """
    if f.n != 2:
        raise UnsupportedDimension("nondegeneracy at infinity is implemented for two variables")
    ws = sorted({w for comp in f.components for w in _positive_edge_normals(comp)})
    for w in ws:
        faces = [face(comp, w) for comp in f.components]
        if any(len(t) == 1 for t in faces):
            continue
        g = edge_polynomial(faces[0], w)
        for t in faces[1:]:
            g = poly_gcd(g, edge_polynomial(t, w))
        g = poly_gcd(g, g)  # monic
        if len(g) > 1:
            return Nondegeneracy(False, w, tuple(ws), tuple(g))
    return Nondegeneracy(True, None, tuple(ws))


# -- finite-minimum evaluators -------------------------------------------------------


@dataclass(frozen=True)
class DivisorRow:
    label: str
    ord_x: int
    ord_y: int


def loj_infinity_min(rows: Iterable[DivisorRow], labels: Optional[Iterable[str]] = None) -> Fraction:
    """``min ordY / ordX`` over rows with ``ordX > 0``; 0 exactly when some such ``ordY`` is 0.

    ``labels`` restricts to the divisors meeting a given point (local version).
    """
    rows = list(rows)
    for r in rows:
        if r.ord_x < 0 or r.ord_y < 0:
            raise InvalidInput("divisor orders must be nonnegative")
    if labels is not None:
        keep = set(labels)
        rows = [r for r in rows if r.label in keep]
    vals = [Fraction(r.ord_y, r.ord_x) for r in rows if r.ord_x > 0]
    if not vals:
        raise InvalidInput("no divisor with positive ordX")
    return min(vals)
