import random

import pytest
from hypothesis import strategies as st

from monoloj.geometry import MonomialIdeal

ACCEPTANCE = {}


def random_ideal(rng: random.Random, dim: int, top: int = 6, extra: int = 3, primary: bool = True) -> MonomialIdeal:
    gens = []
    if primary:
        gens += [tuple(rng.randint(1, top) if i == j else 0 for j in range(dim)) for i in range(dim)]
    gens += [tuple(rng.randint(0, top - 1) for _ in range(dim)) for _ in range(rng.randint(0 if primary else 1, extra))]
    gens = [g for g in gens if any(g)] or [tuple([1] * dim)]
    return MonomialIdeal(tuple(gens))


@st.composite
def ideals(draw, dims=(2, 3), top=6, primary=True):
    dim = draw(st.sampled_from(dims))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_ideal(random.Random(seed), dim, top, primary=primary)


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        ACCEPTANCE[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        verdict = "PASS" if ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")


def random_family(rng: random.Random, size: int):
    """Candidates with positive alpha and beta at both ends of [0, 1]."""
    from fractions import Fraction

    from monoloj.families import FamilyCandidate, FamilySpec

    def end():
        return Fraction(rng.randint(1, 12), rng.randint(1, 3))

    cands = []
    for k in range(size):
        a0, a1, b0, b1 = end(), end(), end(), end()
        if rng.random() < 0.3:
            a1 = a0
        cands.append(FamilyCandidate(f"c{k}", a0, a1 - a0, b0, b1 - b0))
    return FamilySpec(tuple(cands))
