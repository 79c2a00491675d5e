"""One-parameter families: walls, chambers and the piecewise behaviour of ``L(t)``.

Each candidate valuation contributes ``alpha(t) / beta(t)`` with affine numerator
and denominator on ``[0, 1]``. Two candidates swap order only at roots of
``h_ij = alpha_i beta_j - alpha_j beta_i``, a polynomial of degree at most two,
so walls are rational or quadratic surds. Surds are handled exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Sequence, Union

from .arith import InvalidInput, isqrt_bounds
from .geometry import MonomialIdeal, newton_polyhedron, support

Label = Union[tuple, str]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@total_ordering
@dataclass(frozen=True)
class Surd:
    """The real number ``p + q*sqrt(d)`` with ``d`` a positive non-square integer (or ``q == 0``)."""

    p: Fraction
    q: Fraction = Fraction(0)
    d: int = 1

    @classmethod
    def of(cls, x) -> "Surd":
        return cls(Fraction(x))

    @property
    def rational(self) -> bool:
        return self.q == 0

    def sign(self) -> int:
        a, b = _sign(self.p), _sign(self.q)
        if b == 0 or a == b or a == 0:
            return a or b
        # opposite signs: compare p^2 with q^2 d
        return a * _sign(self.p ** 2 - self.q ** 2 * self.d)

    def bracket(self, bits: int = 32) -> tuple[Fraction, Fraction]:
        if self.rational:
            return self.p, self.p
        lo, hi = isqrt_bounds(Fraction(self.d), bits)
        if self.q > 0:
            return self.p + self.q * lo, self.p + self.q * hi
        return self.p + self.q * hi, self.p + self.q * lo

    def __eq__(self, other) -> bool:
        if not isinstance(other, Surd):
            other = Surd.of(other)
        if self.rational or other.rational:
            return self.rational and other.rational and self.p == other.p
        return (self.p == other.p and _sign(self.q) == _sign(other.q)
                and self.q ** 2 * self.d == other.q ** 2 * other.d)

    def __hash__(self):
        if self.rational:
            return hash(self.p)
        # canonical form: move square factors of d into q
        d, q = self.d, self.q
        k = 2
        while k * k <= d:
            while d % (k * k) == 0:
                d //= k * k
                q *= k
            k += 1
        return hash((self.p, q, d))

    def __lt__(self, other) -> bool:
        if not isinstance(other, Surd):
            other = Surd.of(other)
        if self == other:
            return False
        if other.rational:
            return Surd(self.p - other.p, self.q, self.d).sign() < 0
        if self.rational:
            return Surd(other.p - self.p, other.q, other.d).sign() > 0
        if self.d == other.d:
            return Surd(self.p - other.p, self.q - other.q, self.d).sign() < 0
        bits = 16
        while True:
            a, b = self.bracket(bits), other.bracket(bits)
            if a[1] < b[0]:
                return True
            if b[1] < a[0]:
                return False
            bits *= 2

    def __str__(self) -> str:
        from .arith import fmt

        if self.rational:
            return fmt(self.p)
        op = "+" if self.q > 0 else "-"
        return f"{fmt(self.p)} {op} {fmt(abs(self.q))}*sqrt({self.d})"


def _poly_at(coeffs: Sequence[Fraction], t: Surd) -> Surd:
    """Evaluate ``c0 + c1 t + c2 t^2`` at a surd exactly."""
    c0, c1, c2 = coeffs
    p, q, d = t.p, t.q, t.d
    return Surd(c0 + c1 * p + c2 * (p * p + q * q * d), c1 * q + 2 * c2 * p * q, d)


@dataclass(frozen=True)
class FamilyCandidate:
    label: Label
    a0: Fraction
    a1: Fraction
    b0: Fraction
    b1: Fraction

    def alpha(self, t) -> Fraction:
        return self.a0 + self.a1 * t

    def beta(self, t) -> Fraction:
        return self.b0 + self.b1 * t

    def ratio(self, t: Fraction) -> Fraction:
        return self.alpha(t) / self.beta(t)


@dataclass(frozen=True)
class FamilySpec:
    candidates: tuple[FamilyCandidate, ...]

    def __post_init__(self):
        cands = tuple(
            FamilyCandidate(c.label if isinstance(c.label, str) else tuple(c.label),
                            Fraction(c.a0), Fraction(c.a1), Fraction(c.b0), Fraction(c.b1))
            for c in self.candidates
        )
        if not cands:
            raise InvalidInput("a family needs at least one candidate")
        for c in cands:
            # affine functions are positive on [0, 1] iff positive at both ends
            if min(c.alpha(0), c.alpha(1), c.beta(0), c.beta(1)) <= 0:
                raise InvalidInput(f"candidate {c.label}: alpha and beta must be positive on [0, 1]")
        object.__setattr__(self, "candidates", cands)


def _h(ci: FamilyCandidate, cj: FamilyCandidate) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (c0, c1, c2) of ``alpha_i beta_j - alpha_j beta_i``."""
    c0 = ci.a0 * cj.b0 - cj.a0 * ci.b0
    c1 = ci.a0 * cj.b1 + ci.a1 * cj.b0 - cj.a0 * ci.b1 - cj.a1 * ci.b0
    c2 = ci.a1 * cj.b1 - cj.a1 * ci.b1
    return c0, c1, c2


def _squarefree_split(n: int) -> tuple[int, int]:
    """``n = s^2 * r`` with ``r`` squarefree; returns ``(s, r)``."""
    s, r, k = 1, n, 2
    while k * k <= r:
        while r % (k * k) == 0:
            r //= k * k
            s *= k
        k += 1
    return s, r


def _roots(c0, c1, c2) -> list[Surd]:
    if c2 == 0:
        return [] if c1 == 0 else [Surd.of(-c0 / c1)]
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return []
    # sqrt(num/den) = sqrt(num*den)/den
    s, r = _squarefree_split(disc.numerator * disc.denominator)
    root = Fraction(s, disc.denominator)
    centre = -c1 / (2 * c2)
    half = root / (2 * c2)
    if r == 1:
        return sorted({Surd.of(centre + half), Surd.of(centre - half)})
    return sorted([Surd(centre, half, r), Surd(centre, -half, r)])


def walls(spec: FamilySpec) -> list[Surd]:
    """Sorted roots in ``(0, 1)`` of every nonzero ``h_ij``."""
    out = set()
    cands = spec.candidates
    for i in range(len(cands)):
        for j in range(i + 1, len(cands)):
            coeffs = _h(cands[i], cands[j])
            if all(c == 0 for c in coeffs):
                continue
            out.update(r for r in _roots(*coeffs) if Surd.of(0) < r < Surd.of(1))
    return sorted(out)


def maximizers_at(spec: FamilySpec, t: Union[Fraction, Surd]) -> tuple[Label, ...]:
    """Labels attaining the maximal ratio at ``t`` (exact, also at surd points)."""
    if not isinstance(t, Surd):
        t = Surd.of(t)
    cands = spec.candidates
    best = [cands[0]]
    for c in cands[1:]:
        s = _poly_at(_h(c, best[0]), t).sign()
        if s > 0:
            best = [c]
        elif s == 0:
            best.append(c)
    return tuple(c.label for c in best)


def loj_at(spec: FamilySpec, t) -> Fraction:
    t = Fraction(t)
    return max(c.ratio(t) for c in spec.candidates)


def _between(lo: Surd, hi: Surd) -> Fraction:
    """A rational strictly between two distinct numbers."""
    if lo.rational and hi.rational:
        return (lo.p + hi.p) / 2
    bits = 8
    while True:
        a, b = lo.bracket(bits)[1], hi.bracket(bits)[0]
        if a < b:
            return (a + b) / 2
        bits *= 2


@dataclass(frozen=True)
class Chamber:
    lo: Surd
    hi: Surd
    closed_lo: bool                # True only for the chamber starting at 0
    closed_hi: bool                # True only for the chamber ending at 1
    sample: Fraction
    maximizers: tuple[Label, ...]
    formula: FamilyCandidate

    def inv_affine(self) -> Optional[tuple[Fraction, Fraction]]:
        """``(slope, intercept)`` when ``1/L = beta/alpha`` is affine on the chamber."""
        f = self.formula
        if f.a1 == 0:
            return f.b1 / f.a0, f.b0 / f.a0
        if f.b1 * f.a0 - f.b0 * f.a1 == 0:
            return Fraction(0), f.b1 / f.a1
        return None


@dataclass(frozen=True)
class ChamberReport:
    walls: tuple[Surd, ...]
    chambers: tuple[Chamber, ...]
    wall_maximizers: tuple[tuple[Label, ...], ...]
    inv_L_affine: bool


def analyze(spec: FamilySpec) -> ChamberReport:
    ws = walls(spec)
    cuts = [Surd.of(0)] + ws + [Surd.of(1)]
    by_label = {c.label: c for c in spec.candidates}
    chambers = []
    for k in range(len(cuts) - 1):
        lo, hi = cuts[k], cuts[k + 1]
        t = _between(lo, hi)
        winners = maximizers_at(spec, t)
        chambers.append(Chamber(lo, hi, k == 0, k == len(cuts) - 2, t, winners, by_label[winners[0]]))
    forms = [ch.inv_affine() for ch in chambers]
    affine = all(f is not None for f in forms) and len(set(forms)) == 1
    return ChamberReport(tuple(ws), tuple(chambers), tuple(maximizers_at(spec, w) for w in ws), affine)


def stability_interval(spec: FamilySpec, t0) -> tuple[Surd, Surd]:
    """Largest interval around ``t0`` on which a unique maximizer at ``t0`` stays the unique maximizer.

    Requires a strict gap at ``t0``; the ends are the nearest roots of
    ``h_jk`` (``j`` the maximizer) on either side, clipped to ``[0, 1]``.
    """
    t0 = Fraction(t0)
    top = maximizers_at(spec, t0)
    if len(top) != 1:
        raise InvalidInput("no strict gap at t0: the maximizer is not unique")
    j = next(c for c in spec.candidates if c.label == top[0])
    lo, hi = Surd.of(0), Surd.of(1)
    here = Surd.of(t0)
    for c in spec.candidates:
        if c is j:
            continue
        for r in _roots(*_h(j, c)):
            if r < here and r > lo:
                lo = r
            elif here < r < hi:
                hi = r
    return lo, hi


def family_from_monomial(a: MonomialIdeal, principal: Optional[tuple[Sequence, Sequence]] = None,
                         product: Optional[Sequence[tuple[MonomialIdeal, object, object]]] = None) -> FamilySpec:
    """Family over the compact facet normals of NP(a).

    ``principal=(e0, e1)`` describes ``b(t)`` generated by ``x^{e0 + e1 t}``;
    ``product=[(I_j, l0_j, l1_j), ...]`` describes ``prod I_j^{l0_j + l1_j t}``.
    """
    if not a.is_m_primary():
        raise InvalidInput("the ideal a must be m-primary")
    if (principal is None) == (product is None):
        raise InvalidInput("give exactly one of principal or product data")
    cands = []
    for u in newton_polyhedron(a).normals:
        alpha = support(a, u)
        if principal is not None:
            e0, e1 = principal
            b0 = sum(Fraction(x) * w for x, w in zip(e0, u))
            b1 = sum(Fraction(x) * w for x, w in zip(e1, u))
        else:
            b0 = sum(Fraction(l0) * support(i, u) for i, l0, _ in product)
            b1 = sum(Fraction(l1) * support(i, u) for i, _, l1 in product)
        cands.append(FamilyCandidate(u, alpha, Fraction(0), b0, b1))
    return FamilySpec(tuple(cands))
