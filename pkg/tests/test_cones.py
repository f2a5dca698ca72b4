import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from horofan import cones as pc
from horofan.errors import DimensionMismatch, NotStronglyConvex, ZeroVector

from oracles import faces3d_oracle, member_oracle, relint_oracle


def test_primitive():
    assert pc.primitive((2, 4)) == (1, 2)
    assert pc.primitive((1, 0)) == (1, 0)
    assert pc.primitive((0, -3)) == (0, -1)
    with pytest.raises(ZeroVector):
        pc.primitive((0, 0))


def test_redundant_generator_dropped():
    c = pc.cone_from_generators([(1, 0), (0, 1), (1, 1)], 2)
    assert c.rays == ((0, 1), (1, 0))


def test_line_rejected():
    with pytest.raises(NotStronglyConvex):
        pc.cone_from_generators([(1, 0), (-1, 0)], 2)
    with pytest.raises(NotStronglyConvex):
        pc.cone_from_generators([(1, 0), (-1, 0), (0, 1)], 2)


def test_zero_generator_rejected():
    with pytest.raises(ZeroVector):
        pc.cone_from_generators([(0, 0), (1, 0)], 2)


def test_four_ray_cone():
    c = pc.cone_from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)], 3)
    assert len(c.rays) == 4
    assert len(c.facet_normals) == 4


def test_contains_classification():
    c = pc.cone_from_generators([(1, 0), (0, 1)], 2)
    assert pc.contains(c, (1, 1)) == pc.RELATIVE_INTERIOR
    assert pc.contains(c, (1, 0)) == pc.BOUNDARY
    assert pc.contains(c, (-1, 0)) == pc.OUTSIDE
    assert pc.contains(c, (0, 0)) == pc.BOUNDARY
    z = pc.zero_cone(2)
    assert pc.contains(z, (0, 0)) == pc.RELATIVE_INTERIOR
    assert pc.contains(z, (1, 0)) == pc.OUTSIDE
    with pytest.raises(DimensionMismatch):
        pc.contains(c, (1, 0, 0))


def test_contains_off_span():
    r = pc.cone_from_generators([(1, 2, 0)], 3)
    assert pc.contains(r, (2, 4, 0)) == pc.RELATIVE_INTERIOR
    assert pc.contains(r, (1, 2, 1)) == pc.OUTSIDE
    assert pc.contains(r, (-1, -2, 0)) == pc.OUTSIDE


def test_faces_counts():
    c = pc.cone_from_generators([(1, 0), (1, 2)], 2)
    assert len(pc.faces(c)) == 4
    ray = pc.cone_from_generators([(1, 0)], 2)
    assert len(pc.faces(ray)) == 2
    c4 = pc.cone_from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)], 3)
    assert len(pc.faces(c4)) == 10  # origin + 4 rays + 4 facets + itself


def test_is_face_of():
    c = pc.cone_from_generators([(1, 0), (0, 1)], 2)
    assert pc.is_face_of(pc.cone_from_generators([(1, 0)], 2), c)
    assert pc.is_face_of(pc.zero_cone(2), c)
    assert pc.is_face_of(c, c)
    assert not pc.is_face_of(pc.cone_from_generators([(1, 1)], 2), c)


def test_intersections():
    a = pc.cone_from_generators([(1, 0), (1, 2)], 2)
    b = pc.cone_from_generators([(1, 2), (0, 1)], 2)
    assert pc.intersect(a, b).rays == ((1, 2),)
    assert pc.intersect(a, a) == a
    l = pc.cone_from_generators([(1, 0), (0, 1)], 2)
    r = pc.cone_from_generators([(-1, 0), (0, 1)], 2)
    assert pc.intersect(l, r).rays == ((0, 1),)
    o = pc.cone_from_generators([(-1, 0), (0, -1)], 2)
    assert pc.intersect(l, o) == pc.zero_cone(2)


def test_intersection_with_new_rays():
    # square and diamond cones over z=1, intersection is an octagonal cone
    sq = pc.cone_from_generators(
        [(1, 1, 1), (-1, 1, 1), (-1, -1, 1), (1, -1, 1)], 3)
    dm = pc.cone_from_generators(
        [(3, 0, 2), (0, 3, 2), (-3, 0, 2), (0, -3, 2)], 3)
    i = pc.intersect(sq, dm)
    assert len(i.rays) == 8
    for r in i.rays:
        assert pc.contains(sq, r) != pc.OUTSIDE
        assert pc.contains(dm, r) != pc.OUTSIDE


def test_round_trip():
    for gens in ([(1, 0), (0, 1)], [(1, 2, 0), (0, 1, 1), (2, 1, 1)],
                 [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)]):
        c = pc.cone_from_generators(gens, len(gens[0]))
        assert pc.cone_from_generators(c.rays, c.ambient_rank) == c
        assert pc.cone_from_generators(c.rays, c.ambient_rank).facet_normals \
            == c.facet_normals


def _random_pointed_gens(rng, dim, count):
    # points with positive last coordinate span a pointed cone
    gens = []
    while len(gens) < count:
        v = tuple(rng.randint(-3, 3) for _ in range(dim - 1)) + (rng.randint(1, 3),)
        gens.append(v)
    return gens


def test_contains_matches_membership_oracle():
    rng = random.Random(17)
    for _ in range(40):
        dim = rng.randint(2, 3)
        gens = _random_pointed_gens(rng, dim, rng.randint(1, 5))
        c = pc.cone_from_generators(gens, dim)
        for _ in range(8):
            v = tuple(rng.randint(-4, 4) for _ in range(dim))
            got = pc.contains(c, v)
            assert (got != pc.OUTSIDE) == member_oracle(gens, v)
            assert (got == pc.RELATIVE_INTERIOR) == relint_oracle(list(c.rays), v)


def test_faces_match_oracle():
    rng = random.Random(23)
    for _ in range(25):
        gens = _random_pointed_gens(rng, 3, rng.randint(3, 6))
        c = pc.cone_from_generators(gens, 3)
        if c.dim != 3:
            continue
        got = {frozenset(f.rays) for f in pc.faces(c)}
        assert got == faces3d_oracle(gens)


def test_extreme_rays_match_oracle():
    rng = random.Random(29)
    for _ in range(30):
        dim = rng.randint(2, 3)
        gens = [pc.primitive(g)
                for g in _random_pointed_gens(rng, dim, rng.randint(2, 6))]
        c = pc.cone_from_generators(gens, dim)
        expected = {g for g in set(gens)
                    if not member_oracle([h for h in set(gens) if h != g], g)}
        assert set(c.rays) == expected


def test_faces_closed_under_intersection():
    c = pc.cone_from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)], 3)
    fs = pc.faces(c)
    for f, g in combinations(fs, 2):
        assert pc.intersect(f, g) in fs


def test_face_transitivity():
    c = pc.cone_from_generators([(1, 0, 0), (1, 2, 0), (1, 1, 3)], 3)
    for f in pc.faces(c):
        for g in pc.faces(f):
            assert pc.is_face_of(g, c)


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3),
                          st.integers(1, 3)),
                min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_membership_property(gens):
    c = pc.cone_from_generators(gens, 3)
    for g in gens:
        assert pc.contains(c, g) != pc.OUTSIDE
    s = tuple(sum(g[i] for g in gens) for i in range(3))
    assert pc.contains(c, s) != pc.OUTSIDE
