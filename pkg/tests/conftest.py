import pytest

from extremal_graphs import families
from extremal_graphs.graphs import Graph

# frozen fixture data ------------------------------------------------------

# genus-1 rotation system of K5 (first one in lexicographic search order)
K5_TORUS_ROTATION = ((0, 1, 2, 3), (0, 4, 5, 6), (1, 4, 8, 7),
                     (2, 7, 5, 9), (3, 9, 6, 8))

# perfect matching on the 12 interior vertices of the triple-path graph
# ("g2" with counts 4,4,4) that produces the 14-vertex girth-6 cage
G2_HEAWOOD_MATCHING = ((2, 9), (3, 12), (4, 7), (5, 10), (6, 13), (8, 11))

# matching on the 18 midpoints of subdivided 2K_{3,3} giving the
# 30-vertex girth-8 cage
TC_MATCHING = ((12, 21), (13, 25), (14, 29), (15, 26), (16, 27),
               (17, 22), (18, 28), (19, 23), (20, 24))

# midpoints of the three disjoint edge pairs of K4 (edge order is
# lexicographic, so midpoints 4..9 follow edges 01,02,03,12,13,23)
K4_PETERSEN_MATCHING = ((4, 9), (5, 8), (6, 7))


@pytest.fixture
def k4():
    return families.complete(4)


@pytest.fixture
def petersen():
    return families.petersen()


@pytest.fixture
def q3():
    return families.hypercube(3)


@pytest.fixture
def k33():
    return families.complete_bipartite(3, 3)


@pytest.fixture
def paw():
    """Triangle with a pendant edge; edges (0,1),(1,2),(0,2),(0,3)."""
    return Graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


@pytest.fixture
def bridge_barbell():
    """Two triangles joined by a single bridge (tau = 9)."""
    return Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])
