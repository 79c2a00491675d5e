"""Incremental beneath-beyond convex hull for full-dimensional rational point sets.

Facets are kept as simplices (``dim`` point indices each). A point is added only
when it lies strictly beyond some facet; points on a facet hyperplane are treated
as not visible, so coplanar pieces end up as several simplices sharing one
hyperplane and are merged at the end.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .arith import InvalidInput, UnsupportedDimension, dot, normal_through, rank

MAX_DIM = 4


@dataclass(frozen=True)
class HullFacet:
    normal: tuple[int, ...]     # primitive, inward
    offset: Fraction            # min of <normal, x> over the hull
    points: tuple[int, ...]     # indices of input points lying on the facet


def _initial_simplex(pts):
    n = len(pts[0])
    chosen = [0]
    for i in range(1, len(pts)):
        trial = chosen + [i]
        diffs = [[a - b for a, b in zip(pts[j], pts[chosen[0]])] for j in trial[1:]]
        if rank(diffs) == len(trial) - 1:
            chosen = trial
            if len(chosen) == n + 1:
                return chosen
    raise InvalidInput("point set is not full-dimensional")


def _oriented(pts, idx, interior):
    normal = normal_through([pts[i] for i in idx])
    offset = Fraction(dot(normal, pts[idx[0]]))
    if dot(normal, interior) < offset:
        normal = tuple(-c for c in normal)
        offset = -offset
    return normal, offset


def convex_hull(points: Sequence[Sequence]) -> tuple[list[HullFacet], list[tuple]]:
    """Facets of conv(points) in lex order of normals, plus the deduplicated points.

    ``HullFacet.points`` indexes into the returned point list.
    """
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if not pts:
        raise InvalidInput("empty point set")
    n = len(pts[0])
    if n > MAX_DIM:
        raise UnsupportedDimension(f"hull dimension {n} > {MAX_DIM} is not supported")
    seen = {}
    for p in pts:
        seen.setdefault(p, len(seen))
    pts = list(seen)
    start = _initial_simplex(pts)
    interior = tuple(sum(pts[i][k] for i in start) / (n + 1) for k in range(n))
    facets = {}
    for idx in combinations(start, n):
        facets[tuple(sorted(idx))] = _oriented(pts, idx, interior)
    used = set(start)
    for pi, p in enumerate(pts):
        if pi in used:
            continue
        visible = [key for key, (nrm, off) in facets.items() if dot(nrm, p) < off]
        if not visible:
            continue
        ridges = Counter()
        for key in visible:
            for r in combinations(key, n - 1):
                ridges[r] += 1
        for key in visible:
            del facets[key]
        for r, count in ridges.items():
            if count == 1:
                idx = tuple(sorted(r + (pi,)))
                facets[idx] = _oriented(pts, idx, interior)
        used.add(pi)
    merged = {}
    for nrm, off in facets.values():
        merged.setdefault((nrm, off), None)
    out = []
    for nrm, off in sorted(merged):
        on = tuple(i for i, q in enumerate(pts) if dot(nrm, q) == off)
        out.append(HullFacet(nrm, off, on))
    return out, pts
