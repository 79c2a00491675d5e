"""Integral closure of monomial ideals and exact containment tests ``b^q in closure(a^p)``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .arith import InvalidInput, dot, lcm
from .geometry import (
    MonomialIdeal,
    NewtonPolyhedron,
    dominates,
    lattice_box,
    member,
    minimalize,
    newton_polyhedron,
    scale,
)
from .lp import convex_certificate

DEFAULT_MAX_POWER = 64


@dataclass(frozen=True)
class FacetWitness:
    """A monomial that violates the facet ``<normal, x> >= offset``."""

    monomial: tuple[int, ...]
    normal: tuple[int, ...]
    offset: Fraction
    deficit: Fraction

    def check(self) -> bool:
        return self.offset - dot(self.normal, self.monomial) == self.deficit > 0


@dataclass(frozen=True)
class ConvexWitness:
    """``point = sum(lam_i * vertices_i) + slack`` with ``lam`` a probability vector."""

    point: tuple
    vertices: tuple
    lam: tuple[Fraction, ...]
    slack: tuple[Fraction, ...]

    def check(self) -> bool:
        if any(l < 0 for l in self.lam) or sum(self.lam) != 1 or any(s < 0 for s in self.slack):
            return False
        n = len(self.point)
        combo = [sum(l * v[j] for l, v in zip(self.lam, self.vertices)) + self.slack[j] for j in range(n)]
        return all(c == Fraction(p) for c, p in zip(combo, self.point))


@dataclass(frozen=True)
class PowerWitness:
    """``x^{k m}`` is divisible by the product of the ``k`` listed generators."""

    point: tuple[int, ...]
    k: int
    factors: tuple[tuple[int, ...], ...]

    def check(self, ideal: MonomialIdeal) -> bool:
        if len(self.factors) != self.k or any(f not in ideal.gens for f in self.factors):
            return False
        total = [sum(col) for col in zip(*self.factors)]
        return dominates([self.k * c for c in self.point], total)


@dataclass(frozen=True)
class ClosureCertificate:
    member: bool
    witness: Union[FacetWitness, tuple[ConvexWitness, ...]]

    def check(self) -> bool:
        if self.member:
            return all(w.check() for w in self.witness)
        return self.witness.check()


def closure_generators(ideal: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the integral closure.

    The scan stops at the per-axis maxima ``M`` of the vertices: if ``m`` lies in
    NP and ``m_i > M_i`` then ``m - e_i`` still dominates the same convex
    combination of vertices, so ``m`` is not minimal.
    """
    poly = newton_polyhedron(ideal)
    upper = [int(max(v[i] for v in poly.vertices)) for i in range(ideal.dim)]
    pts = [m for m in lattice_box(upper) if member(poly, m)]
    return MonomialIdeal(minimalize(pts))


def _violation(poly: NewtonPolyhedron, m) -> Optional[FacetWitness]:
    worst = None
    for f in poly.facets:
        deficit = f.offset - dot(f.normal, m)
        if deficit > 0 and (worst is None or deficit > worst.deficit):
            worst = FacetWitness(tuple(m), f.normal, f.offset, deficit)
    return worst


def _power_gens(b: MonomialIdeal, q: int, max_power: int):
    if q < 1:
        raise InvalidInput("q must be a positive integer")
    if q > max_power:
        raise InvalidInput(f"power {q} exceeds the cap {max_power}")
    return b.power(q).gens


def closure_contains(b: MonomialIdeal, q: int, a: MonomialIdeal, p: int,
                     max_power: int = DEFAULT_MAX_POWER) -> bool:
    """Boolean form of :func:`contains_closure` (facet test only, no certificates)."""
    if b.dim != a.dim:
        raise InvalidInput("dimension mismatch")
    if p < 1:
        raise InvalidInput("p must be a positive integer")
    target = scale(newton_polyhedron(a), p)
    return all(member(target, g) for g in _power_gens(b, q, max_power))


def contains_closure(b: MonomialIdeal, q: int, a: MonomialIdeal, p: int,
                     max_power: int = DEFAULT_MAX_POWER) -> ClosureCertificate:
    """Decide ``b^q in closure(a^p)`` with a re-checkable certificate.

    For monomial data the answer at ``(q, p)`` equals the answer at ``(qt, pt)``
    for every ``t >= 1``, because ``NP(a^{pt}) = t * NP(a^p)``.
    """
    if b.dim != a.dim:
        raise InvalidInput("dimension mismatch")
    if p < 1:
        raise InvalidInput("p must be a positive integer")
    target = scale(newton_polyhedron(a), p)
    gens = _power_gens(b, q, max_power)
    # first violator in lex order, reported with its largest-deficit facet
    for g in gens:
        bad = _violation(target, g)
        if bad is not None:
            return ClosureCertificate(False, bad)
    witnesses = []
    for g in gens:
        lam, slack = convex_certificate(target.vertices, g)
        witnesses.append(ConvexWitness(tuple(g), target.vertices, tuple(lam), tuple(slack)))
    return ClosureCertificate(True, tuple(witnesses))


def _decompose(gens: Sequence, k: int, target: Sequence, start: int = 0, memo=None):
    """``k`` generators (nondecreasing index) whose sum is ``<= target``, or None."""
    if memo is None:
        memo = set()
    if k == 0:
        return ()
    key = (start, k, tuple(target))
    if key in memo:
        return None
    for i in range(start, len(gens)):
        g = gens[i]
        if dominates(target, g):
            rest = _decompose(gens, k - 1, [t - c for t, c in zip(target, g)], i, memo)
            if rest is not None:
                return (g,) + rest
    memo.add(key)
    return None


def power_witness(ideal: MonomialIdeal, m: Sequence[int]) -> Optional[PowerWitness]:
    """Smallest ``k`` with ``x^{k m} in I^k``, as an explicit product of ``k`` generators.

    The LP certificate bounds the search: with ``k0`` the lcm of the convex
    weights' denominators, ``x^{k0 m}`` is visibly a product of ``k0`` generators.
    Returns None when ``m`` is not in the Newton polyhedron.
    """
    m = tuple(int(c) for c in m)
    if len(m) != ideal.dim or any(c < 0 for c in m):
        raise InvalidInput("m must be a nonnegative integer vector of the right length")
    cert = convex_certificate(ideal.gens, m)
    if cert is None:
        return None
    lam, _ = cert
    k0 = lcm(*(l.denominator for l in lam))
    for k in range(1, k0 + 1):
        factors = _decompose(ideal.gens, k, [k * c for c in m])
        if factors is not None:
            return PowerWitness(m, k, factors)
    raise AssertionError("convex certificate did not yield a power decomposition")


def power_oracle_member(ideal: MonomialIdeal, m: Sequence[int]) -> tuple[bool, Optional[int]]:
    """Independent membership oracle: ``(True, k)`` with minimal ``k`` or ``(False, None)``."""
    w = power_witness(ideal, m)
    if w is None:
        return False, None
    if not w.check(ideal):
        raise AssertionError("power witness failed re-verification")
    return True, w.k
