import pytest

from severi_lattice import LatticePolygon
from severi_lattice.corpus import CorpusSpec, enumerate_corpus


@pytest.fixture
def triangle_d2():
    return LatticePolygon([(0, 0), (2, 0), (0, 2)])


@pytest.fixture
def triangle_d3():
    return LatticePolygon([(0, 0), (3, 0), (0, 3)])


@pytest.fixture
def unit_square():
    return LatticePolygon([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def diamond1():
    return LatticePolygon([(1, 0), (0, 1), (-1, 0), (0, -1)])


@pytest.fixture
def diamond2():
    return LatticePolygon([(2, 0), (0, 2), (-2, 0), (0, -2)])


@pytest.fixture
def paper_triangle():
    # the (0,0), (2,0), (2a,2b) family at a=2, b=1
    return LatticePolygon([(0, 0), (2, 0), (4, 2)])


@pytest.fixture(scope="session")
def corpus2():
    return enumerate_corpus(CorpusSpec(max_coordinate=2))


@pytest.fixture(scope="session")
def corpus4():
    return enumerate_corpus(CorpusSpec(max_coordinate=4))
