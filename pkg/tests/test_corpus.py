import random
from itertools import combinations

import pytest

from severi_lattice.corpus import (
    CorpusSpec,
    convex_hull,
    enumerate_corpus,
    random_polygon,
)
from severi_lattice.errors import DomainError
from severi_lattice.polygons import LatticePolygon


def canonical(verts):
    minx = min(x for x, _ in verts)
    miny = min(y for _, y in verts)
    return tuple(sorted((x - minx, y - miny) for x, y in verts))


def brute_force_classes(bound):
    """Translation classes of convex polygons via raw subset enumeration."""
    grid = [(x, y) for x in range(bound + 1) for y in range(bound + 1)]
    classes = set()
    for size in range(3, len(grid) + 1):
        for subset in combinations(grid, size):
            hull = convex_hull(subset)
            if len(hull) != size or set(hull) != set(subset):
                continue  # some point is not a strict hull vertex
            classes.add(canonical(hull))
    return classes


class TestSpec:
    def test_bounds(self):
        with pytest.raises(DomainError):
            CorpusSpec(max_coordinate=0)
        with pytest.raises(DomainError):
            CorpusSpec(max_coordinate=7)
        with pytest.raises(DomainError):
            CorpusSpec(max_coordinate=2, dedup="rotation")
        with pytest.raises(DomainError):
            CorpusSpec(max_coordinate=2, limit=-1)


class TestEnumeration:
    def test_unit_box(self):
        polys = enumerate_corpus(CorpusSpec(max_coordinate=1))
        got = {canonical(p.vertices) for p in polys}
        expected = {
            canonical([(0, 0), (1, 0), (0, 1)]),
            canonical([(0, 0), (1, 0), (1, 1)]),
            canonical([(0, 0), (1, 1), (0, 1)]),
            canonical([(1, 0), (1, 1), (0, 1)]),
            canonical([(0, 0), (1, 0), (1, 1), (0, 1)]),
        }
        assert got == expected
        assert len(polys) == 5

    def test_matches_subset_brute_force(self):
        for bound in (1, 2):
            polys = enumerate_corpus(CorpusSpec(max_coordinate=bound))
            got = {canonical(p.vertices) for p in polys}
            assert len(got) == len(polys)  # no duplicates
            assert got == brute_force_classes(bound)

    def test_limit(self):
        polys = enumerate_corpus(CorpusSpec(max_coordinate=2, limit=10))
        assert len(polys) == 10

    def test_deterministic_order(self):
        a = enumerate_corpus(CorpusSpec(max_coordinate=2))
        b = enumerate_corpus(CorpusSpec(max_coordinate=2))
        assert [p.vertices for p in a] == [p.vertices for p in b]

    def test_dedup_none_counts_placements(self):
        classes = enumerate_corpus(CorpusSpec(max_coordinate=2))
        placed = enumerate_corpus(CorpusSpec(max_coordinate=2, dedup="none"))
        expected = 0
        for poly in classes:
            bw = max(x for x, _ in poly.vertices)
            bh = max(y for _, y in poly.vertices)
            expected += (2 - bw + 1) * (2 - bh + 1)
        assert len(placed) == expected
        assert len({p.vertices for p in placed}) == len(placed)

    def test_every_polygon_fits_box(self):
        for poly in enumerate_corpus(CorpusSpec(max_coordinate=2)):
            for x, y in poly.vertices:
                assert 0 <= x <= 2 and 0 <= y <= 2


class TestConvexHull:
    def test_examples(self):
        assert convex_hull([(0, 0), (2, 0), (1, 1), (0, 2), (1, 0)]) == [
            (0, 0),
            (2, 0),
            (0, 2),
        ]
        assert len(convex_hull([(0, 0), (1, 1), (2, 2)])) < 3

    def test_hull_is_convex_polygon(self):
        rng = random.Random(2)
        for _ in range(50):
            pts = [(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(12)]
            hull = convex_hull(pts)
            if len(hull) >= 3:
                poly = LatticePolygon(hull)
                assert poly.vertices == tuple(hull)


class TestRandomPolygon:
    def test_deterministic(self):
        a = random_polygon(random.Random(42), 8)
        b = random_polygon(random.Random(42), 8)
        assert a == b

    def test_coordinates_in_range(self):
        rng = random.Random(9)
        for _ in range(50):
            poly = random_polygon(rng, 8)
            for x, y in poly.vertices:
                assert -8 <= x <= 8 and -8 <= y <= 8
