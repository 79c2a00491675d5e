"""Dense two-phase simplex over the rationals (Bland's rule, so it cannot cycle).

Only small problems appear here (a handful of rows), so the tableau is a plain
list of ``Fraction`` rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Optional[tuple[Fraction, ...]] = None
    value: Optional[Fraction] = None


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, c: int) -> None:
        piv = self.rows[r][c]
        self.rows[r] = [v / piv for v in self.rows[r]]
        self.rhs[r] /= piv
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                f = row[c]
                self.rows[i] = [a - f * b for a, b in zip(row, self.rows[r])]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def reduced_costs(self, cost):
        red = list(cost)
        z = Fraction(0)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb != 0:
                red = [rc - cb * a for rc, a in zip(red, self.rows[i])]
                z += cb * self.rhs[i]
        return red, z

    def optimize(self, cost, allowed) -> str:
        while True:
            red, _ = self.reduced_costs(cost)
            entering = next((j for j in allowed if red[j] < 0), None)
            if entering is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = self.rhs[i] / row[entering]
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], entering)


def minimize(c: Sequence, a_eq: Sequence[Sequence], b_eq: Sequence) -> LPResult:
    """Minimize ``c.x`` subject to ``a_eq x = b_eq`` and ``x >= 0``."""
    nvar = len(c)
    rows = []
    rhs = []
    for row, b in zip(a_eq, b_eq):
        row = [Fraction(v) for v in row]
        b = Fraction(b)
        if b < 0:
            row = [-v for v in row]
            b = -b
        rows.append(row)
        rhs.append(b)
    m = len(rows)
    # artificial variable per row
    for i in range(m):
        rows[i] = rows[i] + [Fraction(int(i == k)) for k in range(m)]
    tab = _Tableau(rows, rhs, [nvar + i for i in range(m)])
    phase1 = [Fraction(0)] * nvar + [Fraction(1)] * m
    tab.optimize(phase1, range(nvar + m))
    _, infeas = tab.reduced_costs(phase1)
    if infeas != 0:
        return LPResult(INFEASIBLE)
    # drive remaining artificials out of the basis, dropping redundant rows
    keep = []
    for i in range(m):
        if tab.basis[i] >= nvar:
            col = next((j for j in range(nvar) if tab.rows[i][j] != 0), None)
            if col is None:
                continue
            tab.pivot(i, col)
        keep.append(i)
    tab.rows = [tab.rows[i][:nvar] for i in keep]
    tab.rhs = [tab.rhs[i] for i in keep]
    tab.basis = [tab.basis[i] for i in keep]
    cost = [Fraction(v) for v in c]
    status = tab.optimize(cost, range(nvar))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * nvar
    for i, b in enumerate(tab.basis):
        x[b] = tab.rhs[i]
    value = sum((ci * xi for ci, xi in zip(cost, x)), Fraction(0))
    return LPResult(OPTIMAL, tuple(x), value)


def convex_certificate(points: Sequence[Sequence], target: Sequence):
    """Find ``lam >= 0, sum(lam) = 1`` with ``sum(lam_i * points_i) <= target``.

    Returns ``(lam, slack)`` or ``None`` when no such combination exists.
    """
    k = len(points)
    n = len(target)
    # variables: lam_1..lam_k, slack_1..slack_n
    a_eq = []
    b_eq = []
    for j in range(n):
        a_eq.append([p[j] for p in points] + [int(i == j) for i in range(n)])
        b_eq.append(target[j])
    a_eq.append([1] * k + [0] * n)
    b_eq.append(1)
    res = minimize([0] * (k + n), a_eq, b_eq)
    if res.status != OPTIMAL:
        return None
    return res.x[:k], res.x[k:]
