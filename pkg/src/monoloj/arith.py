"""Exact rational helpers: parsing, formatting, primitive vectors, small linear algebra.

Every quantity in the package is an ``int`` or a ``fractions.Fraction``; no floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

Rat = Fraction


class InvalidInput(ValueError):
    """Malformed or out-of-contract input."""


class UnsupportedDimension(ValueError):
    """Operation requested outside the dimensions or modes it supports."""


def rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InvalidInput(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError as exc:
            raise InvalidInput(f"not a rational: {x!r}") from exc
    raise InvalidInput(f"not a rational: {x!r}")


def fmt(x) -> str:
    """Serialize a rational as ``"a/b"`` in lowest terms, or an integer string."""
    if x is None:
        return "inf"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def lcm(*xs: int) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), xs, 1)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(x) for x in v]
    if all(x == 0 for x in fr):
        raise InvalidInput("zero vector has no primitive representative")
    den = lcm(*(x.denominator for x in fr))
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, (abs(i) for i in ints))
    return tuple(i // g for i in ints)


def rank(rows: Iterable[Sequence]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def det(m: Sequence[Sequence]):
    """Determinant by fraction-exact Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign = 1
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        out *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return sign * out


def normal_through(points: Sequence[Sequence]) -> tuple[int, ...]:
    """Primitive integer normal of the hyperplane through ``len(p0)`` points.

    Generalized cross product of the difference vectors; the caller orients it.
    """
    p0 = points[0]
    n = len(p0)
    rows = [[Fraction(a) - Fraction(b) for a, b in zip(p, p0)] for p in points[1:]]
    comps = []
    for k in range(n):
        minor = [r[:k] + r[k + 1:] for r in rows]
        comps.append((-1) ** k * det(minor))
    return primitive(comps)


def solve(a: Sequence[Sequence], b: Sequence):
    """Solve ``a x = b`` (possibly overdetermined) exactly.

    Returns the unique solution, or ``None`` when the system is inconsistent.
    Raises when the solution is not unique.
    """
    m = [[Fraction(x) for x in r] + [Fraction(y)] for r, y in zip(a, b)]
    nrows = len(m)
    ncols = len(m[0]) - 1
    r = 0
    pivots = []
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    if any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in m):
        return None
    if len(pivots) < ncols:
        raise ValueError("linear system is underdetermined")
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][-1]
    return x


def isqrt_bounds(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational bracket lo <= sqrt(x) <= hi of width 2**-bits."""
    from math import isqrt

    x = Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    scale = 1 << bits
    num = x.numerator * x.denominator * scale * scale
    r = isqrt(num)
    lo = Fraction(r, x.denominator * scale)
    hi = Fraction(r + 1, x.denominator * scale)
    if r * r == num:
        hi = lo
    return lo, hi


def is_square(x: Fraction) -> bool:
    from math import isqrt

    x = Fraction(x)
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def exact_sqrt(x: Fraction) -> Fraction:
    from math import isqrt

    x = Fraction(x)
    return Fraction(isqrt(x.numerator), isqrt(x.denominator))
