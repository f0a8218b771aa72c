import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clustercone.cones import (
    Cone,
    cone_from_generators,
    cones_equal,
    contains,
    contains_relative_interior,
    dual,
    extract_rays,
    intersect_with_subspace,
    lineality_space,
    project_coordinates,
)
from clustercone.exact import DimensionMismatch, rank

QUADRANT = cone_from_generators(2, [(1, 0), (0, 1)])


def test_quadrant_rays_and_facets():
    assert extract_rays(QUADRANT) == [(0, 1), (1, 0)]
    assert lineality_space(QUADRANT) == []
    assert QUADRANT.inequalities == [(0, 1), (1, 0)]


def test_opposite_generators_are_lineality():
    C = cone_from_generators(2, [(1, 0), (-1, 0)])
    assert C.lineality == [(1, 0)]
    assert C.rays == []


def test_full_plane():
    C = cone_from_generators(2, [(1, 0), (-1, 0), (0, 1), (0, -1)])
    assert len(C.lineality) == 2 and C.rays == []


def test_a1_degree_cone_is_pointed_two_dimensional():
    C = cone_from_generators(6, [(1, 1, -1, 0, -1, 0), (1, 1, 0, -1, 0, -1)])
    assert C.is_pointed() and len(C.rays) == 2 and C.linear_dim() == 2


def test_dual_quadrant_self_dual():
    assert cones_equal(dual(QUADRANT), QUADRANT)


def test_dual_by_hand():
    # w1 >= 0 and w1 + w2 >= 0
    C = dual(cone_from_generators(2, [(1, 0), (1, 1)]))
    assert cones_equal(C, cone_from_generators(2, [(0, 1), (1, -1)]))


def test_membership_examples():
    assert contains(QUADRANT, (1, 1)) and contains_relative_interior(QUADRANT, (1, 1))
    assert contains(QUADRANT, (1, 0)) and not contains_relative_interior(QUADRANT, (1, 0))
    with pytest.raises(DimensionMismatch):
        contains(QUADRANT, (1, 0, 0))


def test_quadrant_vs_half_plane():
    half = cone_from_generators(2, [(1, 0), (-1, 0), (0, 1)])
    assert not cones_equal(QUADRANT, half)


def test_cones_equal_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        cones_equal(QUADRANT, cone_from_generators(3, [(1, 0, 0)]))


def test_intersect_and_project():
    C = intersect_with_subspace(QUADRANT, [(1, 0)])
    assert C.rays == [(0, 1)] and C.lineality == []
    space = cone_from_generators(3, [], [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    P = project_coordinates(space, [0, 1])
    assert len(P.lineality) == 2


def test_from_inequalities_roundtrip():
    C = Cone.from_inequalities(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert C.rays == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


vectors = st.lists(st.integers(-3, 3), min_size=1, max_size=6).flatmap(
    lambda v: st.lists(st.lists(st.integers(-3, 3), min_size=len(v), max_size=len(v)), min_size=1, max_size=7)
)


@given(vectors)
@settings(max_examples=80, deadline=None)
def test_biduality(gens):
    dim = len(gens[0])
    C = cone_from_generators(dim, gens)
    assert cones_equal(dual(dual(C)), C)


@given(vectors)
@settings(max_examples=80, deadline=None)
def test_rays_are_extreme(gens):
    dim = len(gens[0])
    C = cone_from_generators(dim, gens)
    rays = C.rays
    for k, r in enumerate(rays):
        smaller = cone_from_generators(dim, rays[:k] + rays[k + 1:], C.lineality)
        assert not smaller.contains(r)


@given(vectors, st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_order_independence(gens, rnd):
    dim = len(gens[0])
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    A, B = cone_from_generators(dim, gens), cone_from_generators(dim, shuffled)
    assert A.rays == B.rays and A.lineality == B.lineality and A.inequalities == B.inequalities


@given(vectors)
@settings(max_examples=80, deadline=None)
def test_dimension_count(gens):
    dim = len(gens[0])
    C = cone_from_generators(dim, gens)
    span = rank(gens)
    assert len(C.lineality) + len(C.rays) >= span
    assert (len(C.lineality) + len(C.rays) == span) == C.is_simplicial()


def test_generators_satisfy_inequalities():
    rnd = random.Random(0)
    for _ in range(30):
        gens = [tuple(rnd.randint(-3, 3) for _ in range(4)) for _ in range(6)]
        C = cone_from_generators(4, gens)
        for g in gens:
            assert all(sum(a * b for a, b in zip(h, g)) >= 0 for h in C.inequalities)
