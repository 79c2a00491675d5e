"""Monomial ideals, Newton polyhedra, support functions and Minkowski calculus."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, cmp_to_key, lru_cache
from itertools import product as cartesian
from typing import Iterable, Sequence

from .arith import InvalidInput, UnsupportedDimension, det, dot, rank
from .hull import MAX_DIM, convex_hull
from .lp import convex_certificate

ExpVec = tuple[int, ...]
Point = tuple[Fraction, ...]


def dominates(a: Sequence, b: Sequence) -> bool:
    """True when ``a >= b`` componentwise."""
    return all(x >= y for x, y in zip(a, b))


def minimalize(gens: Iterable[Sequence]) -> tuple:
    """Componentwise-minimal elements of a finite set, in lex order."""
    pts = sorted({tuple(g) for g in gens})
    if not pts:
        raise InvalidInput("empty generator set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise InvalidInput("generators of mixed dimension")
    # lex order: a dominating point comes after everything it dominates
    out = []
    for p in pts:
        if not any(dominates(p, q) for q in out):
            out.append(p)
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal generated by monomials, stored as its minimal exponent vectors."""

    gens: tuple[ExpVec, ...]
    dim: int = field(default=0)

    def __post_init__(self):
        gens = [tuple(int(c) for c in g) for g in self.gens]
        if not gens:
            raise InvalidInput("a monomial ideal needs at least one generator")
        dim = self.dim or len(gens[0])
        if dim < 1:
            raise InvalidInput("ambient dimension must be >= 1")
        for g in gens:
            if len(g) != dim:
                raise InvalidInput(f"generator {g} has wrong length for dimension {dim}")
            if any(c < 0 for c in g):
                raise InvalidInput(f"negative exponent in {g}")
        object.__setattr__(self, "gens", minimalize(gens))
        object.__setattr__(self, "dim", dim)

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, exponents: Sequence[int]) -> "MonomialIdeal":
        n = len(exponents)
        return cls(tuple(tuple(a if i == j else 0 for j in range(n)) for i, a in enumerate(exponents)))

    def is_proper(self) -> bool:
        return all(any(c > 0 for c in g) for g in self.gens)

    def pure_power(self, axis: int):
        """Smallest ``a`` with ``x_axis^a`` in the ideal, or None."""
        ks = [g[axis] for g in self.gens if all(c == 0 for j, c in enumerate(g) if j != axis)]
        return min(ks) if ks else None

    def is_m_primary(self) -> bool:
        return self.is_proper() and all(self.pure_power(i) is not None for i in range(self.dim))

    def contains(self, m: Sequence[int]) -> bool:
        return any(dominates(m, g) for g in self.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if other.dim != self.dim:
            raise InvalidInput("dimension mismatch")
        return MonomialIdeal(tuple(tuple(a + b for a, b in zip(g, h)) for g in self.gens for h in other.gens))

    def power(self, k: int) -> "MonomialIdeal":
        """``I^k`` by iterated sumset, minimalized after each step."""
        if k < 0:
            raise InvalidInput("negative power")
        out = MonomialIdeal((tuple([0] * self.dim),))
        for _ in range(k):
            out = out * self
        return out


def support(ideal: MonomialIdeal, u: Sequence) -> Fraction:
    """Support function ``h_I(u)``: the toric valuation ``v_u(I)``."""
    if len(u) != ideal.dim:
        raise InvalidInput("weight dimension mismatch")
    if any(Fraction(c) < 0 for c in u):
        raise InvalidInput("weights must be nonnegative")
    return Fraction(min(dot(u, g) for g in ideal.gens))


@dataclass(frozen=True)
class Facet:
    normal: tuple[int, ...]
    offset: Fraction
    vertices: tuple[Point, ...]

    @property
    def compact(self) -> bool:
        return all(c > 0 for c in self.normal)


@dataclass(frozen=True)
class NewtonPolyhedron:
    """``conv(vertices) + orthant`` together with its facet inequalities.

    The H-representation is ``x >= 0`` plus ``<normal, x> >= offset`` for every
    facet; coordinate facets appear in ``facets`` when they are genuine facets.
    """

    dim: int
    vertices: tuple[Point, ...]
    facets: tuple[Facet, ...]

    @cached_property
    def compact_facets(self) -> tuple[Facet, ...]:
        return tuple(f for f in self.facets if f.compact)

    def support(self, u: Sequence) -> Fraction:
        if any(Fraction(c) < 0 for c in u):
            raise InvalidInput("weights must be nonnegative")
        return min(Fraction(dot(u, v)) for v in self.vertices)

    def __contains__(self, m) -> bool:
        return member(self, m)

    def is_bounded_complement(self) -> bool:
        """True when orthant minus the polyhedron is bounded (every axis is hit)."""
        return all(
            any(all(c == 0 for j, c in enumerate(v) if j != i) for v in self.vertices)
            for i in range(self.dim)
        )

    @property
    def normals(self) -> tuple[tuple[int, ...], ...]:
        return tuple(f.normal for f in self.compact_facets)


@lru_cache(maxsize=4096)
def _polyhedron(points: tuple[Point, ...]) -> NewtonPolyhedron:
    n = len(points[0])
    if n > MAX_DIM:
        raise UnsupportedDimension(f"Newton polyhedra are supported for dim <= {MAX_DIM}, got {n}")
    # conv(G + {0, e_1..e_n}) sits inside conv(G) + orthant and shares every facet
    # of it; its extra facets have a negative normal coordinate and are dropped.
    cloud = list(points)
    for p in points:
        for i in range(n):
            cloud.append(tuple(c + (1 if j == i else 0) for j, c in enumerate(p)))
    hull_facets, _ = convex_hull(cloud)
    kept = [(f.normal, f.offset) for f in hull_facets if all(c >= 0 for c in f.normal)]
    vertices = []
    for p in points:
        tight = [nrm for nrm, off in kept if dot(nrm, p) == off]
        tight += [tuple(int(j == i) for j in range(n)) for i in range(n) if p[i] == 0]
        if rank(tight) == n:
            vertices.append(p)
    vertices = tuple(sorted(vertices))
    facets = tuple(
        Facet(nrm, off, tuple(v for v in vertices if dot(nrm, v) == off)) for nrm, off in kept
    )
    return NewtonPolyhedron(n, vertices, facets)


def polyhedron_from_points(points: Iterable[Sequence]) -> NewtonPolyhedron:
    """Newton polyhedron ``conv(points) + orthant`` of arbitrary nonnegative rational points."""
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if any(c < 0 for p in pts for c in p):
        raise InvalidInput("points must be nonnegative")
    return _polyhedron(minimalize(pts))


def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    return polyhedron_from_points(ideal.gens)


def member(poly: NewtonPolyhedron, m: Sequence) -> bool:
    """Membership through the facet inequalities."""
    if len(m) != poly.dim:
        raise InvalidInput("point dimension mismatch")
    m = [Fraction(c) for c in m]
    return all(c >= 0 for c in m) and all(dot(f.normal, m) >= f.offset for f in poly.facets)


def member_oracle(poly: NewtonPolyhedron, m: Sequence) -> bool:
    """Membership through exact LP feasibility over the vertices (independent of facets)."""
    m = [Fraction(c) for c in m]
    if any(c < 0 for c in m):
        return False
    return convex_certificate(poly.vertices, m) is not None


def minkowski_sum(p: NewtonPolyhedron, q: NewtonPolyhedron) -> NewtonPolyhedron:
    if p.dim != q.dim:
        raise InvalidInput("dimension mismatch")
    return polyhedron_from_points(tuple(a + b for a, b in zip(v, w)) for v in p.vertices for w in q.vertices)


def scale(p: NewtonPolyhedron, r) -> NewtonPolyhedron:
    r = Fraction(r)
    if r <= 0:
        raise InvalidInput("scale factor must be positive")
    return polyhedron_from_points(tuple(r * c for c in v) for v in p.vertices)


def _ordered_polygon(facet: Facet) -> list[Point]:
    # convex polygon in 3-space: sort around the first vertex by orientation w.r.t. the normal
    v0, rest = facet.vertices[0], list(facet.vertices[1:])

    def orient(a, b):
        s = det([facet.normal, [x - y for x, y in zip(a, v0)], [x - y for x, y in zip(b, v0)]])
        return -1 if s > 0 else (1 if s < 0 else 0)

    return [v0] + sorted(rest, key=cmp_to_key(orient))


def covolume(p: NewtonPolyhedron) -> Fraction:
    """Volume of ``orthant minus P`` as a union of cones from the origin over compact facets."""
    if p.dim > 3:
        raise UnsupportedDimension("covolume is implemented for dim <= 3")
    if not p.is_bounded_complement():
        raise InvalidInput("complement of the polyhedron in the orthant is unbounded")
    d = p.dim
    fact = {1: 1, 2: 2, 3: 6}[d]
    total = Fraction(0)
    for f in p.compact_facets:
        if d == 1:
            simplices = [[f.vertices[0]]]
        elif d == 2:
            simplices = [sorted(f.vertices)]
        else:
            poly = _ordered_polygon(f)
            simplices = [[poly[0], poly[i], poly[i + 1]] for i in range(1, len(poly) - 1)]
        for s in simplices:
            total += abs(det(s)) / fact
    return total


def lattice_box(upper: Sequence[int]):
    """All integer points ``0 <= x <= upper`` in lex order."""
    return cartesian(*(range(u + 1) for u in upper))
