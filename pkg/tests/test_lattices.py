import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from severi_lattice.errors import DomainError
from severi_lattice.lattices import (
    AffineLattice2,
    Z2,
    affine_span,
    divisors,
    intermediate_lattices,
    lattice_index,
    rotate90,
)


def odd_lattice():
    return affine_span([(1, 0), (0, 1), (-1, 0), (0, -1)])


def even_lattice():
    return AffineLattice2.linear_from_generators([(1, 1), (1, -1)])


@st.composite
def linear_lattices(draw, bound=6):
    d1 = draw(st.integers(1, bound))
    d2 = draw(st.integers(1, bound))
    e = draw(st.integers(0, d1 - 1))
    return AffineLattice2((0, 0), ((d1, e), (0, d2)))


@st.composite
def generator_lists(draw):
    count = draw(st.integers(2, 5))
    gens = draw(
        st.lists(
            st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
            min_size=count,
            max_size=count,
        )
    )
    return gens


class TestCanonicalForm:
    def test_bad_basis_rejected(self):
        with pytest.raises(DomainError):
            AffineLattice2((0, 0), ((0, 0), (0, 1)))
        with pytest.raises(DomainError):
            AffineLattice2((0, 0), ((2, 2), (0, 1)))  # e out of range
        with pytest.raises(DomainError):
            AffineLattice2((5, 0), ((2, 0), (0, 1)))  # basepoint not reduced

    def test_rank_deficient_span(self):
        with pytest.raises(DomainError):
            AffineLattice2.linear_from_generators([(1, 0), (2, 0)])
        with pytest.raises(DomainError):
            AffineLattice2.linear_from_generators([(0, 0)])
        with pytest.raises(DomainError):
            affine_span([(0, 0), (1, 1), (2, 2)])

    @settings(max_examples=200, deadline=None)
    @given(generator_lists())
    def test_idempotent(self, gens):
        try:
            lat = AffineLattice2.linear_from_generators(gens)
        except DomainError:
            return  # rank-deficient sample
        again = AffineLattice2.linear_from_generators(lat.generators())
        assert lat == again

    @settings(max_examples=100, deadline=None)
    @given(linear_lattices(), st.tuples(st.integers(-20, 20), st.integers(-20, 20)))
    def test_basepoint_reduction_is_canonical(self, lat, shift):
        g1, g2 = lat.generators()
        p = (shift[0], shift[1])
        q = (p[0] + 3 * g1[0] - 2 * g2[0], p[1] + 3 * g1[1] - 2 * g2[1])
        a = lat.translate(p)
        b = lat.translate(q)
        assert a == b  # same coset, same representation


class TestSpanAndMembership:
    def test_span_examples(self):
        assert affine_span([(0, 0), (1, 0), (0, 1)]) == Z2
        odd = odd_lattice()
        assert odd.index_in_z2 == 2
        assert odd.contains((1, 0)) and odd.contains((0, 1)) and odd.contains((2, 1))
        assert not odd.contains((0, 0)) and not odd.contains((1, 1))
        both_even = affine_span([(0, 0), (2, 0), (0, 2)])
        assert both_even.index_in_z2 == 4
        assert both_even.contains((4, -2)) and not both_even.contains((1, 2))

    def test_z2_contains_everything(self):
        for p in [(0, 0), (3, -7), (100, 41)]:
            assert Z2.contains(p)

    @settings(max_examples=100, deadline=None)
    @given(linear_lattices(), st.integers(-5, 5), st.integers(-5, 5))
    def test_generated_points_are_members(self, lat, s, t):
        g1, g2 = lat.generators()
        assert lat.contains((s * g1[0] + t * g2[0], s * g1[1] + t * g2[1]))

    @settings(max_examples=60, deadline=None)
    @given(linear_lattices(bound=4))
    def test_membership_density(self, lat):
        # a fundamental-domain tile of Z^2 holds exactly idx cosets,
        # so a (idx x idx) block contains idx lattice points
        idx = lat.index_in_z2
        count = sum(
            1 for x in range(idx) for y in range(idx) if lat.contains((x, y))
        )
        assert count == idx

    @settings(max_examples=100, deadline=None)
    @given(generator_lists())
    def test_span_minimality(self, gens):
        try:
            lat = affine_span(gens)
        except DomainError:
            return
        for p in gens:
            assert lat.contains(p)
        # any sublattice through all the points contains the whole span
        idx = lat.index_in_z2
        if idx > 12:
            return  # keep the exhaustive candidate scan desk-scale
        base = lat.basepoint
        g1, g2 = lat.generators()
        for d1 in range(1, idx + 1):
            for d2 in range(1, idx // d1 + 1):
                for e in range(d1):
                    for bx in range(d1):
                        for by in range(d2):
                            cand = AffineLattice2((bx, by), ((d1, e), (0, d2)))
                            if all(cand.contains(p) for p in gens):
                                assert cand.contains(base)
                                assert cand.contains(
                                    (base[0] + g1[0], base[1] + g1[1])
                                )
                                assert cand.contains(
                                    (base[0] + g2[0], base[1] + g2[1])
                                )


class TestIndices:
    def test_index_examples(self):
        assert Z2.index_in_z2 == 1
        assert even_lattice().index_in_z2 == 2
        assert AffineLattice2.linear_from_generators([(2, 0), (0, 2)]).index_in_z2 == 4

    def test_lattice_index_examples(self):
        two_z2 = AffineLattice2.linear_from_generators([(2, 0), (0, 2)])
        assert lattice_index(two_z2, Z2) == 4
        assert lattice_index(even_lattice(), Z2) == 2
        assert lattice_index(even_lattice(), even_lattice()) == 1

    def test_lattice_index_requires_containment(self):
        three = AffineLattice2.linear_from_generators([(3, 0), (0, 1)])
        two = AffineLattice2.linear_from_generators([(2, 0), (0, 1)])
        with pytest.raises(DomainError):
            lattice_index(three, two)

    def test_lattice_index_requires_linear(self):
        with pytest.raises(DomainError):
            lattice_index(odd_lattice(), Z2)

    @settings(max_examples=80, deadline=None)
    @given(linear_lattices(bound=4))
    def test_index_multiplicativity(self, lat):
        try:
            mids = intermediate_lattices(lat)
        except DomainError:
            return  # non-cyclic quotient
        for mid in mids:
            assert lat.index_in_z2 == mid.index_in_z2 * lattice_index(lat, mid)


class TestRotation:
    def test_examples(self):
        assert rotate90(Z2) == Z2
        assert rotate90(even_lattice()) == even_lattice()
        horizontal = AffineLattice2.linear_from_generators([(1, 0), (0, 3)])
        vertical = AffineLattice2.linear_from_generators([(3, 0), (0, 1)])
        assert rotate90(horizontal) == vertical

    def test_requires_linear(self):
        with pytest.raises(DomainError):
            rotate90(odd_lattice())

    @settings(max_examples=100, deadline=None)
    @given(linear_lattices())
    def test_involution_and_index(self, lat):
        once = rotate90(lat)
        assert once.index_in_z2 == lat.index_in_z2
        assert rotate90(once) == lat
        assert rotate90(rotate90(rotate90(rotate90(lat)))) == lat


class TestIntermediates:
    def test_examples(self):
        assert intermediate_lattices(Z2) == [Z2]
        even = even_lattice()
        assert intermediate_lattices(even) == [even, Z2]
        l6 = AffineLattice2.linear_from_generators([(1, 0), (0, 6)])
        mids = intermediate_lattices(l6)
        assert [lattice_index(l6, m) for m in mids] == [1, 2, 3, 6]
        for mid in mids:
            for g in l6.generators():
                assert mid.contains(g)

    def test_non_cyclic_rejected(self):
        with pytest.raises(DomainError):
            intermediate_lattices(
                AffineLattice2.linear_from_generators([(2, 0), (0, 2)])
            )

    @settings(max_examples=60, deadline=None)
    @given(linear_lattices(bound=5))
    def test_completeness_against_brute_force(self, lat):
        try:
            mids = intermediate_lattices(lat)
        except DomainError:
            return
        # brute force: every triangular basis of index dividing idx
        idx = lat.index_in_z2
        found = set()
        for d1 in range(1, idx + 1):
            if idx % d1:
                continue
            for d2 in range(1, idx // d1 + 1):
                if (d1 * d2) and idx % (d1 * d2) == 0:
                    for e in range(d1):
                        cand = AffineLattice2((0, 0), ((d1, e), (0, d2)))
                        if all(cand.contains(g) for g in lat.generators()):
                            found.add(cand)
        assert found == set(mids)
        assert len(mids) == len(divisors(idx))


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]
    with pytest.raises(DomainError):
        divisors(0)


def test_json_round_trip():
    lat = odd_lattice()
    assert AffineLattice2.from_json_dict(lat.to_json_dict()) == lat
    with pytest.raises(DomainError):
        AffineLattice2.from_json_dict({"basis": [[1, 0], [0, 1]]})
