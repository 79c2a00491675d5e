"""Colengths, mixed multiplicities by exact interpolation, and Teissier-type checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod
from typing import Sequence

import numpy as np

from .arith import InvalidInput, UnsupportedDimension, solve
from .closure import closure_contains
from .exponent import loj_ideal
from .geometry import MonomialIdeal, covolume, minkowski_sum, newton_polyhedron

MAX_MIXED_DIM = 3


def _require_primary(ideal: MonomialIdeal) -> tuple[int, ...]:
    if not ideal.is_m_primary():
        raise InvalidInput("ideal is not m-primary, colength is infinite")
    return tuple(ideal.pure_power(i) for i in range(ideal.dim))


def _multiply(ind: np.ndarray, gens) -> np.ndarray:
    """Indicator of ``K * I`` from the indicator of ``K`` (both truncated to one box)."""
    out = np.zeros_like(ind)
    for g in gens:
        if any(c >= s for c, s in zip(g, ind.shape)):
            continue
        dst = tuple(slice(c, None) for c in g)
        src = tuple(slice(0, s - c) for c, s in zip(g, ind.shape))
        out[dst] |= ind[src]
    return out


def colength(ideal: MonomialIdeal) -> int:
    """Number of standard monomials, i.e. the length of ``R / I``."""
    box = _require_primary(ideal)
    ind = _multiply(np.ones(box, dtype=bool), ideal.gens)
    return int(ind.size - ind.sum())


def product_colengths(i_ideal: MonomialIdeal, j_ideal: MonomialIdeal, lo: int, hi: int) -> dict:
    """``{(n1, n2): colength(I^n1 J^n2)}`` for ``lo <= n1, n2 <= hi``."""
    a = _require_primary(i_ideal)
    b = _require_primary(j_ideal)
    # the complement of I^n1 J^n2 lies below n1*a + n2*b on every axis
    box = tuple(hi * (x + y) for x, y in zip(a, b))
    ind = np.ones(box, dtype=bool)
    for _ in range(lo):
        ind = _multiply(ind, i_ideal.gens)
    for _ in range(lo):
        ind = _multiply(ind, j_ideal.gens)
    out = {}
    row = ind
    for n1 in range(lo, hi + 1):
        cur = row
        for n2 in range(lo, hi + 1):
            out[(n1, n2)] = int(cur.size - cur.sum())
            if n2 < hi:
                cur = _multiply(cur, j_ideal.gens)
        if n1 < hi:
            row = _multiply(row, i_ideal.gens)
    return out


@dataclass(frozen=True)
class MixedTable:
    dim: int
    e: tuple[int, ...]          # e[i] = e(I^[i], J^[d-i])
    window: tuple[int, int]     # (n0, span)
    stable: bool


def _interpolate(values: dict, n0: int, d: int):
    """Degree-``d`` coefficients of the exact polynomial through the grid, or None."""
    exps = [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]
    grid = [(n1, n2) for n1 in range(n0, n0 + d + 2) for n2 in range(n0, n0 + d + 2)]
    rows = [[Fraction(n1) ** i * Fraction(n2) ** j for i, j in exps] for n1, n2 in grid]
    coeffs = solve(rows, [values[g] for g in grid])
    if coeffs is None:
        return None
    top = dict(zip(exps, coeffs))
    e = []
    for i in range(d + 1):
        v = top[(i, d - i)] * factorial(i) * factorial(d - i)
        if v.denominator != 1 or v < 0:
            return None
        e.append(int(v))
    return tuple(e)


def mixed_multiplicities(i_ideal: MonomialIdeal, j_ideal: MonomialIdeal, n0: int | None = None,
                         max_doublings: int = 2) -> MixedTable:
    """Mixed multiplicities read off the colength polynomial of ``I^n1 J^n2``.

    The grid ``{n0..n0+d+1}^2`` determines the polynomial; the same fit one step
    further out must agree before the table is marked stable.
    """
    if i_ideal.dim != j_ideal.dim:
        raise InvalidInput("dimension mismatch")
    d = i_ideal.dim
    if d > MAX_MIXED_DIM:
        raise UnsupportedDimension(f"mixed multiplicities are implemented for dim <= {MAX_MIXED_DIM}")
    if n0 is None:
        n0 = 2 * max(max(g) for g in i_ideal.gens + j_ideal.gens)
    n0 = max(n0, 1)
    for _ in range(max_doublings + 1):
        values = product_colengths(i_ideal, j_ideal, n0, n0 + d + 2)
        first = _interpolate(values, n0, d)
        second = _interpolate(values, n0 + 1, d)
        if first is not None and first == second:
            table = MixedTable(d, first, (n0, d + 2), True)
            _cross_check(table, i_ideal, j_ideal)
            return table
        n0 *= 2
    raise ArithmeticError("colength interpolation did not stabilize; increase n0")


def _cross_check(table: MixedTable, i_ideal, j_ideal) -> None:
    d = table.dim
    if table.e[d] != factorial(d) * covolume(newton_polyhedron(i_ideal)):
        raise AssertionError("e(I) disagrees with the covolume of NP(I)")
    if table.e[0] != factorial(d) * covolume(newton_polyhedron(j_ideal)):
        raise AssertionError("e(J) disagrees with the covolume of NP(J)")


def multiplicity(ideal: MonomialIdeal) -> int:
    """Hilbert-Samuel multiplicity ``e(I) = d! covol(NP(I))``."""
    _require_primary(ideal)
    v = factorial(ideal.dim) * covolume(newton_polyhedron(ideal))
    assert v.denominator == 1
    return int(v)


# -- inequality checks ---------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    holds: bool
    detail: str


def _minkowski_holds(e_ij: int, a: int, b: int, d: int) -> bool:
    """Exact test of ``e_ij^(1/d) <= a^(1/d) + b^(1/d)`` for ``d <= 3``."""
    w = e_ij - a - b
    if w <= 0 or d == 1:
        return w <= 0
    if d == 2:
        return w * w <= 4 * a * b
    # d == 3: with Y = (ab)^(1/3)(a^(1/3)+b^(1/3)) one needs w <= 3Y, and Y is the
    # positive root of g(Y) = Y^3 - 3abY - ab(a+b), increasing past that root
    y = Fraction(w, 3)
    return y ** 3 - 3 * a * b * y - a * b * (a + b) <= 0


@dataclass(frozen=True)
class TeissierReport:
    table: MixedTable
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)


def minimal_containment_power(j_ideal: MonomialIdeal, i_ideal: MonomialIdeal, p: int, cap: int = 64):
    """Least ``q`` with ``J^q`` inside ``closure(I^p)`` by exhaustive search, or None past ``cap``."""
    for q in range(1, cap + 1):
        if closure_contains(j_ideal, q, i_ideal, p, max_power=cap):
            return q
    return None


def check_teissier(i_ideal: MonomialIdeal, j_ideal: MonomialIdeal, powers: Sequence[int] = (1, 2, 3)) -> TeissierReport:
    d = i_ideal.dim
    table = mixed_multiplicities(i_ideal, j_ideal)
    e = table.e
    checks = []
    for i in range(1, d):
        checks.append(Check(f"log-convexity i={i}", e[i] ** 2 <= e[i - 1] * e[i + 1],
                            f"{e[i]}^2 <= {e[i - 1]}*{e[i + 1]}"))
    e_i, e_j = e[d], e[0]
    e_ij = factorial(d) * covolume(minkowski_sum(newton_polyhedron(i_ideal), newton_polyhedron(j_ideal)))
    expansion = sum(comb(d, k) * e[k] for k in range(d + 1))
    checks.append(Check("mixed expansion of e(IJ)", e_ij == expansion, f"{e_ij} == {expansion}"))
    checks.append(Check("Minkowski", _minkowski_holds(int(e_ij), e_i, e_j, d),
                        f"e(IJ)={e_ij}, e(I)={e_i}, e(J)={e_j}"))
    maximal = MonomialIdeal.maximal(d)
    tab_i = mixed_multiplicities(i_ideal, maximal)
    tab_j = mixed_multiplicities(j_ideal, maximal)
    for p in powers:
        q = minimal_containment_power(j_ideal, i_ideal, p)
        if q is None:
            continue
        ok = all(q ** k * tab_j.e[k] >= p ** k * tab_i.e[k] for k in range(1, d + 1))
        checks.append(Check(f"containment bound p={p}", ok, f"minimal q={q}"))
    loj = loj_ideal(i_ideal, j_ideal).value
    ok = all(loj ** k * tab_j.e[k] >= tab_i.e[k] for k in range(1, d + 1))
    checks.append(Check("Loj bound", ok, f"L={loj}, L^{d}*e(J)={loj ** d * e_j} >= e(I)={e_i}"))
    return TeissierReport(table, tuple(checks))


@dataclass(frozen=True)
class MilnorReport:
    mu: int
    loj: Fraction
    checks: tuple[Check, ...]


def milnor_and_gradient(exponents: Sequence[int]) -> MilnorReport:
    """Milnor number and gradient Łojasiewicz exponent of ``f = sum x_i^{a_i}``."""
    exps = [int(a) for a in exponents]
    if not exps or any(a < 2 for a in exps):
        raise InvalidInput("Brieskorn exponents must all be >= 2")
    d = len(exps)
    jac = MonomialIdeal.diagonal([a - 1 for a in exps])
    mu = colength(jac)
    assert mu == prod(a - 1 for a in exps)
    loj = loj_ideal(jac, MonomialIdeal.maximal(d)).value
    assert loj == max(exps) - 1
    checks = []
    if d <= MAX_MIXED_DIM:
        table = mixed_multiplicities(jac, MonomialIdeal.maximal(d))
        for i in range(1, d + 1):
            checks.append(Check(f"L^{i} >= e(J^[{i}], m^[{d - i}])", loj ** i >= table.e[i],
                                f"{loj ** i} >= {table.e[i]}"))
    else:
        checks.append(Check(f"L^{d} >= e(J)", loj ** d >= mu, f"{loj ** d} >= {mu}"))
    return MilnorReport(mu, loj, tuple(checks))
