"""Łojasiewicz exponents, log canonical thresholds and the Θ invariant of monomial data.

Everything reduces to support functions. For ideals, the ratio ``h_a / h_b`` is
linear over concave on each cone of the normal fan of NP(a), hence quasi-convex
there, so its maximum sits on a ray of that fan; the coordinate rays give 0 for
m-primary ``a``, leaving the compact facet normals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import ceil, floor
from typing import Optional, Sequence, Union

from .arith import InvalidInput, dot, solve
from .geometry import (
    MonomialIdeal,
    NewtonPolyhedron,
    member,
    minkowski_sum,
    newton_polyhedron,
    polyhedron_from_points,
    scale,
    support,
)
from .lp import OPTIMAL, minimize


# -- filtrations --------------------------------------------------------------


@dataclass(frozen=True)
class Power:
    """The filtration ``a_p = I^p``."""

    ideal: MonomialIdeal

    @property
    def dim(self) -> int:
        return self.ideal.dim

    def region(self) -> NewtonPolyhedron:
        return newton_polyhedron(self.ideal)

    def value(self, u) -> Fraction:
        return support(self.ideal, u)


@dataclass(frozen=True)
class LinearForms:
    """``a_p`` spanned by monomials with ``<w_j, m> >= c_j p`` for every constraint."""

    dim: int
    constraints: tuple[tuple[tuple[int, ...], Fraction], ...]

    def __post_init__(self):
        cons = tuple((tuple(int(c) for c in w), Fraction(c)) for w, c in self.constraints)
        if not cons:
            raise InvalidInput("a linear-form filtration needs at least one constraint")
        for w, c in cons:
            if len(w) != self.dim:
                raise InvalidInput(f"constraint {w} has wrong length")
            if any(x < 0 for x in w) or all(x == 0 for x in w):
                raise InvalidInput(f"constraint weight {w} must be nonnegative and nonzero")
            if c <= 0:
                raise InvalidInput("constraint offsets must be positive")
        object.__setattr__(self, "constraints", cons)

    def region(self) -> NewtonPolyhedron:
        # vertices of {x >= 0, <w_j, x> >= c_j}: feasible intersections of n tight rows
        n = self.dim
        rows = [(w, c) for w, c in self.constraints]
        rows += [(tuple(int(i == j) for j in range(n)), Fraction(0)) for i in range(n)]
        verts = set()
        for combo in combinations(rows, n):
            try:
                x = solve([w for w, _ in combo], [c for _, c in combo])
            except ValueError:
                continue
            if x is None:
                continue
            if all(c >= 0 for c in x) and all(dot(w, x) >= c for w, c in self.constraints):
                verts.add(tuple(x))
        if not verts:
            raise InvalidInput("empty constraint region")
        return polyhedron_from_points(verts)

    def value(self, u) -> Fraction:
        u = [Fraction(c) for c in u]
        if any(c < 0 for c in u):
            raise InvalidInput("weights must be nonnegative")
        n, k = self.dim, len(self.constraints)
        # min <u, x>  s.t.  <w_j, x> - s_j = c_j,  x, s >= 0
        a_eq = [list(w) + [-int(i == j) for i in range(k)] for j, (w, _) in enumerate(self.constraints)]
        res = minimize(u + [0] * k, a_eq, [c for _, c in self.constraints])
        if res.status != OPTIMAL:
            raise InvalidInput(f"linear program is {res.status}")
        return res.value


@dataclass(frozen=True)
class Product:
    """Closure of ``prod_j I_j^{ceil(lambda_j p)}``; asymptotically ``sum lambda_j NP(I_j)``."""

    factors: tuple[tuple[MonomialIdeal, Fraction], ...]

    def __post_init__(self):
        facs = tuple((i, Fraction(l)) for i, l in self.factors)
        if not facs:
            raise InvalidInput("a product filtration needs at least one factor")
        if len({i.dim for i, _ in facs}) != 1:
            raise InvalidInput("factors of mixed dimension")
        if any(l <= 0 for _, l in facs):
            raise InvalidInput("factor weights must be positive")
        object.__setattr__(self, "factors", facs)

    @property
    def dim(self) -> int:
        return self.factors[0][0].dim

    def region(self) -> NewtonPolyhedron:
        out = None
        for ideal, lam in self.factors:
            piece = scale(newton_polyhedron(ideal), lam)
            out = piece if out is None else minkowski_sum(out, piece)
        return out

    def value(self, u) -> Fraction:
        return sum((lam * support(ideal, u) for ideal, lam in self.factors), Fraction(0))


FiltrationSpec = Union[Power, LinearForms, Product]


def v_filtration(u: Sequence, spec: FiltrationSpec) -> Fraction:
    """Asymptotic toric valuation ``v_u(a_.) = inf_p v_u(a_p) / p``."""
    if len(u) != spec.dim:
        raise InvalidInput("weight dimension mismatch")
    return spec.value(u)


# -- Łojasiewicz exponents ------------------------------------------------------


@dataclass(frozen=True)
class Candidate:
    u: tuple[int, ...]
    va: Fraction
    vb: Fraction

    @property
    def ratio(self) -> Fraction:
        return self.va / self.vb


@dataclass(frozen=True)
class LojResult:
    value: Optional[Fraction]           # None encodes infinity
    maximizers: tuple[tuple[int, ...], ...]
    per_candidate: tuple[Candidate, ...]
    lower_bound_only: bool = False


def _unit(n, i):
    return tuple(int(j == i) for j in range(n))


def _assemble(rays, va, vb, lower_bound_only=False) -> LojResult:
    cands = []
    infinite = []
    for u in rays:
        a, b = va(u), vb(u)
        if b > 0:
            cands.append(Candidate(u, a, b))
        elif a > 0:
            infinite.append(u)
        # 0/0 carries no constraint and is skipped
    if infinite:
        return LojResult(None, tuple(infinite), tuple(cands), lower_bound_only)
    if not cands:
        raise InvalidInput("empty candidate set")
    best = max(c.ratio for c in cands)
    winners = tuple(c.u for c in cands if c.ratio == best)
    return LojResult(best, winners, tuple(cands), lower_bound_only)


def loj_ideal(a: MonomialIdeal, b: MonomialIdeal) -> LojResult:
    """``Loj_b(a)``: smallest slope ``q/p`` with ``b^q in closure(a^p)`` asymptotically."""
    if a.dim != b.dim:
        raise InvalidInput("dimension mismatch")
    if not a.is_m_primary():
        raise InvalidInput("the ideal a must be m-primary")
    if not b.is_proper():
        raise InvalidInput("the ideal b must be proper")
    rays = newton_polyhedron(a).normals
    res = _assemble(rays, lambda u: support(a, u), lambda u: support(b, u))
    # strictly positive weights see every generator of a proper ideal
    assert res.value is not None and len(res.per_candidate) == len(rays)
    return res


def loj_filtration(a: FiltrationSpec, b: FiltrationSpec) -> LojResult:
    """``Loj_b(a)`` for monomial filtrations.

    In the plane the facet normals of both regions plus the coordinate rays
    generate a common refinement of the two normal fans, and a ratio of linear
    functions on a cone peaks on a ray. In higher dimension the same ray set is
    evaluated but the result is only certified as a lower bound.
    """
    if a.dim != b.dim:
        raise InvalidInput("dimension mismatch")
    if isinstance(a, Power) and isinstance(b, Power):
        return loj_ideal(a.ideal, b.ideal)
    n = a.dim
    rays = []
    for spec in (a, b):
        rays += [f.normal for f in spec.region().facets]
    rays += [_unit(n, i) for i in range(n)]
    rays = sorted(set(rays))
    return _assemble(rays, a.value, b.value, lower_bound_only=n >= 3)


# -- log canonical threshold and Θ -----------------------------------------------


def _region(spec) -> NewtonPolyhedron:
    if isinstance(spec, MonomialIdeal):
        return newton_polyhedron(spec)
    return spec.region()


def lct(spec: Union[MonomialIdeal, FiltrationSpec]) -> Fraction:
    """Howald's formula: ``min (sum u) / offset`` over the compact facets."""
    poly = _region(spec)
    if not poly.is_bounded_complement():
        raise InvalidInput("lct needs an m-primary ideal (bounded complement)")
    return min(Fraction(sum(f.normal)) / f.offset for f in poly.compact_facets)


def lct_diagonal_oracle(spec: Union[MonomialIdeal, FiltrationSpec]) -> Fraction:
    """``1/s`` for the least ``s`` with ``s*(1,..,1)`` in the region, found by LP over vertices."""
    poly = _region(spec)
    if not poly.is_bounded_complement():
        raise InvalidInput("lct needs an m-primary ideal (bounded complement)")
    n, verts = poly.dim, poly.vertices
    k = len(verts)
    # variables lam_1..lam_k, s, slack_1..slack_n:  s - sum lam v_i - slack_i = 0
    a_eq = [[-v[i] for v in verts] + [1] + [-int(i == j) for j in range(n)] for i in range(n)]
    a_eq.append([1] * k + [0] + [0] * n)
    res = minimize([0] * k + [1] + [0] * n, a_eq, [0] * n + [1])
    if res.status != OPTIMAL or res.value <= 0:
        raise AssertionError("diagonal oracle LP failed")
    return 1 / res.value


@dataclass(frozen=True)
class ThetaReport:
    lct: Fraction
    loj_m: Fraction
    theta: Fraction
    rigid: bool
    diagonal_facet: Optional[tuple[tuple[int, ...], Fraction]] = field(default=None)


def theta(ideal: MonomialIdeal) -> ThetaReport:
    """``Θ = lct * Loj_m / d``; rigid when one diagonal facet carries both extremes."""
    n = ideal.dim
    c = lct(ideal)
    loj = loj_ideal(ideal, MonomialIdeal.maximal(n))
    th = c * loj.value / n
    diag = tuple([1] * n)
    facet = next((f for f in newton_polyhedron(ideal).compact_facets if f.normal == diag), None)
    rigid = False
    if facet is not None:
        rigid = Fraction(n) / facet.offset == c and diag in loj.maximizers
    return ThetaReport(c, loj.value, th, rigid, (facet.normal, facet.offset) if facet else None)


# -- sharpness construction ------------------------------------------------------


@dataclass(frozen=True)
class SharpnessWitness:
    n: int
    p: int
    q: int
    witness: tuple[int, int]
    valuation_checks: tuple[tuple[tuple[int, int], Fraction, Fraction], ...]  # (v, v(m^q), v(J_N^p))
    facet: tuple[tuple[int, int], int]                                      # (N, 1), p N^2
    witness_outside: bool

    @property
    def ok(self) -> bool:
        return all(lhs >= rhs for _, lhs, rhs in self.valuation_checks) and self.witness_outside


def sharpness_witness(valuations: Sequence[Sequence[int]], p: int = 1) -> SharpnessWitness:
    """Build ``N, q`` with ``v(m^q) >= v(J_N^p)`` on every ``v`` yet ``y^q`` outside ``J_N^p``.

    ``J_N`` is the closure of ``(x^N, y^{N^2})``.
    """
    vals = [tuple(int(c) for c in v) for v in valuations]
    if not vals:
        raise InvalidInput("need at least one valuation")
    if any(len(v) != 2 or min(v) <= 0 for v in vals):
        raise InvalidInput("valuations must be pairs of positive integers")
    if p < 1:
        raise InvalidInput("p must be positive")
    bound = 1 + max(Fraction(a, b) for a, b in vals)
    n = max(2, floor(bound) + 1)
    m = max(ceil(Fraction(a, min(a, b))) for a, b in vals)
    q = p * n * m
    j_n = MonomialIdeal(((n, 0), (0, n * n)))
    maximal = MonomialIdeal.maximal(2)
    checks = tuple((v, q * support(maximal, v), p * support(j_n, v)) for v in vals)
    witness = (0, q)
    outside = not member(scale(newton_polyhedron(j_n), p), witness)
    return SharpnessWitness(n, p, q, witness, checks, ((n, 1), p * n * n), outside)
