"""The twelve acceptance criteria, all with exact comparisons.

A terminal summary prints one PASS/FAIL line per criterion (see conftest.py).
"""

import random
from fractions import Fraction
from math import ceil

from conftest import random_family, random_ideal
from monoloj.closure import closure_generators, power_oracle_member
from monoloj.exponent import (
    LinearForms,
    lct,
    lct_diagonal_oracle,
    loj_filtration,
    loj_ideal,
    sharpness_witness,
    theta,
    v_filtration,
)
from monoloj.families import FamilyCandidate, FamilySpec, analyze, loj_at, maximizers_at, walls
from monoloj.geometry import (
    MonomialIdeal,
    covolume,
    member,
    member_oracle,
    minkowski_sum,
    newton_polyhedron,
    scale,
    support,
)
from monoloj.infinity import DivisorRow, PolyMap, loj_infinity_min, nondegenerate_at_infinity
from monoloj.multiplicity import check_teissier, milnor_and_gradient, minimal_containment_power, mixed_multiplicities

M2 = MonomialIdeal.maximal(2)


def _min_q_brute(a: MonomialIdeal, b: MonomialIdeal, p: int = 1, cap: int = 64) -> int:
    """Least q with every generator of b^q in p*NP(a), by explicit powers and the LP oracle."""
    target = scale(newton_polyhedron(a), p)
    for q in range(1, cap + 1):
        if all(member_oracle(target, g) for g in b.power(q).gens):
            return q
    raise AssertionError("cap reached")


def test_criterion_01_diagonal_ideals():
    rng = random.Random(1)
    for _ in range(20):
        n = rng.randint(1, 4)
        alphas = [rng.randint(1, 9) for _ in range(n)]
        res = loj_ideal(MonomialIdeal.diagonal(alphas), MonomialIdeal.maximal(n))
        assert res.value == max(alphas), alphas


def test_criterion_02_finite_normalized_blowup():
    res = loj_ideal(MonomialIdeal(((5, 0), (2, 3), (0, 7))), M2)
    assert res.value == 7
    assert res.maximizers == ((2, 1),)
    # the facet through (2,3) and (0,7) has normal (2,1); (3,1) has the same support value 7
    assert support(MonomialIdeal(((5, 0), (2, 3), (0, 7))), (3, 1)) == 7


A48 = MonomialIdeal(((4, 0), (2, 3), (0, 5)))


def test_criterion_03_facet_formula_matches_containment_oracle():
    res = loj_ideal(A48, M2)
    oracle = _min_q_brute(A48, M2)
    assert res.value == oracle
    # p > 1 as well: min q equals ceil(p * Loj)
    for p in (2, 3):
        assert _min_q_brute(A48, M2, p) == ceil(p * res.value)


def test_criterion_03_stated_expectation_six_with_maximizer_3_2():
    # The criterion states 6 with maximizer (3,2). Both the facet formula and the
    # containment oracle give 5: (2,3) lies above the segment (4,0)-(0,5)
    # (5*2 + 4*3 = 22 > 20), so NP has one compact edge with normal (5,4).
    res = loj_ideal(A48, M2)
    assert (res.value, res.maximizers) == (6, ((3, 2),)), (
        f"computed {res.value} with maximizers {res.maximizers}; "
        f"containment oracle gives {_min_q_brute(A48, M2)}"
    )


def test_criterion_04_linear_filtration_pair():
    a = LinearForms(2, (((1, 2), 3),))
    b = LinearForms(2, (((2, 1), 5),))
    assert v_filtration((1, 2), a) == 3
    assert v_filtration((1, 2), b) == Fraction(5, 2)
    res = loj_filtration(a, b)
    assert res.value == Fraction(6, 5)
    assert res.maximizers == ((1, 2),)
    assert not res.lower_bound_only


def test_criterion_05_change_of_maximizer_family():
    spec = FamilySpec((FamilyCandidate((3, 2), 12, 0, 7, 3), FamilyCandidate((1, 1), 5, 0, 3, 1)))
    assert [w.p for w in walls(spec)] == [Fraction(1, 3)]
    rep = analyze(spec)
    first, second = rep.chambers
    assert first.closed_lo and first.lo == 0 and first.hi == Fraction(1, 3) and first.maximizers == ((3, 2),)
    assert second.closed_hi and second.lo == Fraction(1, 3) and second.hi == 1 and second.maximizers == ((1, 1),)
    assert maximizers_at(spec, Fraction(1, 3)) == ((3, 2), (1, 1))
    assert loj_at(spec, 0) == Fraction(12, 7)
    assert loj_at(spec, 1) == Fraction(5, 4)


def test_criterion_06_lct():
    for d in range(1, 5):
        m = MonomialIdeal.maximal(d)
        assert lct(m) == d == lct_diagonal_oracle(m)
        for k in range(1, 4):
            mk = m.power(k)
            assert lct(mk) == Fraction(d, k) == lct_diagonal_oracle(mk)
    i = MonomialIdeal(((2, 0), (0, 3)))
    assert lct(i) == Fraction(5, 6) == lct_diagonal_oracle(i)
    rng = random.Random(6)
    for _ in range(50):
        ideal = random_ideal(rng, rng.choice((2, 3)))
        assert lct(ideal) == lct_diagonal_oracle(ideal)


def test_criterion_07_theta():
    rng = random.Random(7)
    for _ in range(200):
        ideal = random_ideal(rng, rng.choice((2, 3)))
        rep = theta(ideal)
        assert rep.theta >= 1, ideal.gens
        assert (rep.theta == 1) == rep.rigid, ideal.gens
    for d in (2, 3):
        for k in (1, 2, 3):
            rep = theta(MonomialIdeal.maximal(d).power(k))
            assert rep.theta == 1 and rep.rigid
            assert rep.diagonal_facet == (tuple([1] * d), k)
    rep = theta(MonomialIdeal(((2, 0), (0, 3))))
    assert rep.theta == Fraction(5, 4) and not rep.rigid


def test_criterion_08_sharpness():
    rng = random.Random(8)
    for _ in range(20):
        vals = [(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, 4))]
        w = sharpness_witness(vals)
        assert w.n >= 2 and w.n > 1 + max(Fraction(a, b) for a, b in vals)
        for v, lhs, rhs in w.valuation_checks:
            assert lhs >= rhs, (vals, v)
        # the witness y^q violates the facet N u + v >= p N^2 and NP membership
        assert w.n * w.witness[0] + w.witness[1] < w.p * w.n ** 2
        j_n = MonomialIdeal(((w.n, 0), (0, w.n ** 2)))
        assert not member_oracle(scale(newton_polyhedron(j_n), w.p), w.witness)
        assert w.ok


def test_criterion_09_mixed_multiplicities():
    i = MonomialIdeal(((2, 0), (0, 3)))
    table = mixed_multiplicities(i, M2)
    assert table.e == (1, 2, 6) and table.stable
    e0, e1, e2 = table.e
    assert e1 ** 2 <= e0 * e2
    e_ij = 2 * covolume(minkowski_sum(newton_polyhedron(i), newton_polyhedron(M2)))
    assert e_ij == 11 == e2 + 2 * e1 + e0
    # Minkowski for d = 2: sqrt(11) <= sqrt(6) + 1  <=>  (11 - 7)^2 <= 4 * 6
    assert (e_ij - e2 - e0) ** 2 <= 4 * e2 * e0
    rep = check_teissier(i, M2)
    assert rep.ok, rep.checks
    names = {c.name for c in rep.checks}
    assert {"containment bound p=1", "containment bound p=2", "containment bound p=3"} <= names
    tab_i = mixed_multiplicities(i, M2)
    for p in (1, 2, 3):
        q = minimal_containment_power(M2, i, p)
        assert q == 3 * p
        assert all(q ** k * 1 >= p ** k * tab_i.e[k] for k in (1, 2))


def test_criterion_10_brieskorn():
    rep = milnor_and_gradient((3, 4))
    assert rep.mu == 6 and rep.loj == 3
    assert rep.loj ** 2 >= rep.mu
    assert all(c.holds for c in rep.checks)


def test_criterion_11_property_suites():
    rng = random.Random(11)
    for _ in range(100):
        ideal = random_ideal(rng, rng.choice((2, 3)), top=5)
        poly = newton_polyhedron(ideal)
        for _ in range(5):
            pt = tuple(Fraction(rng.randint(0, 30), rng.randint(1, 5)) for _ in range(ideal.dim))
            assert member(poly, pt) == member_oracle(poly, pt)
        closed = closure_generators(ideal)
        assert closure_generators(closed) == closed
        upper = [int(max(v[i] for v in poly.vertices)) for i in range(ideal.dim)]
        for _ in range(5):
            m = tuple(rng.randint(0, u) for u in upper)
            assert power_oracle_member(ideal, m)[0] == member(poly, m)
        other = random_ideal(rng, ideal.dim, top=4)
        prod_poly = newton_polyhedron(ideal * other)
        for u in poly.normals + newton_polyhedron(other).normals:
            assert prod_poly.support(u) == support(ideal, u) + support(other, u)
            for p in range(1, 6):
                assert support(ideal.power(p), u) == p * poly.support(u)
                assert scale(poly, p).support(u) == p * support(ideal, u)
    # Loj closure invariance and valuative lower bound
    for _ in range(100):
        a = random_ideal(rng, 2, top=6)
        b = random_ideal(rng, 2, top=3)
        res = loj_ideal(a, b)
        assert loj_ideal(closure_generators(a), closure_generators(b)).value == res.value
    a = MonomialIdeal(((5, 0), (2, 3), (0, 7)))
    loj = loj_ideal(a, M2).value
    for _ in range(1000):
        u = (rng.randint(1, 50), rng.randint(1, 50))
        assert Fraction(support(a, u)) / support(M2, u) <= loj
    # chamber constancy and L-continuity
    for _ in range(100):
        spec = random_family(rng, rng.randint(1, 6))
        rep = analyze(spec)
        for ch in rep.chambers:
            lo, hi = ch.lo.bracket(40)[1], ch.hi.bracket(40)[0]
            for k in range(1, 6):
                t = lo + (hi - lo) * Fraction(k, 6)
                assert maximizers_at(spec, t) == ch.maximizers
                assert loj_at(spec, t) == ch.formula.ratio(t)
        for w, left, right in zip(rep.walls, rep.chambers, rep.chambers[1:]):
            if w.rational:
                assert left.formula.ratio(w.p) == right.formula.ratio(w.p)


def test_criterion_12_infinity():
    assert loj_infinity_min([DivisorRow("E1", 1, 0), DivisorRow("E2", 1, 5)]) == 0
    assert loj_infinity_min([DivisorRow("E1", 2, 3), DivisorRow("E2", 1, 1)]) == 1
    xy = PolyMap(2, ({(1, 0): 1}, {(0, 1): 1}))
    same = PolyMap(2, ({(1, 0): 1, (0, 1): 1}, {(1, 0): 1, (0, 1): 1}))
    diff = PolyMap(2, ({(1, 0): 1, (0, 1): 1}, {(1, 0): 1, (0, 1): -1}))
    assert nondegenerate_at_infinity(xy).nondegenerate
    res = nondegenerate_at_infinity(same)
    assert not res.nondegenerate and res.offending_w == (1, 1)
    assert nondegenerate_at_infinity(diff).nondegenerate
