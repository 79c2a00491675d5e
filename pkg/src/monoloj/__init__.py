"""Exact polyhedral engine for Łojasiewicz exponents, lct and mixed multiplicities of monomial data."""

from .arith import InvalidInput, UnsupportedDimension, fmt, rat
from .closure import closure_generators, contains_closure, power_oracle_member
from .exponent import (
    LinearForms,
    Power,
    Product,
    lct,
    loj_filtration,
    loj_ideal,
    sharpness_witness,
    theta,
    v_filtration,
)
from .families import FamilyCandidate, FamilySpec, analyze, family_from_monomial, walls
from .geometry import (
    MonomialIdeal,
    covolume,
    member,
    minimalize,
    minkowski_sum,
    newton_polyhedron,
    scale,
    support,
)
from .infinity import DivisorRow, PolyMap, gamma_infinity, loj_infinity_min, nondegenerate_at_infinity
from .multiplicity import check_teissier, colength, milnor_and_gradient, mixed_multiplicities

__version__ = "0.1.0"
