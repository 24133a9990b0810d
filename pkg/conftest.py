import pytest

from constructions.classical import classical_gq
from constructions.hyperoval import regular_hyperoval, t2_star
from geometry.graph import incidence_graph
from symmetry.collineations import induced_collineations


# ---------------------------------------------------------------------------- GEOMETRIES


@pytest.fixture(scope="session")
def w32():
    return classical_gq("W3", 2)


@pytest.fixture(scope="session")
def w33():
    return classical_gq("W3", 3)


@pytest.fixture(scope="session")
def qminus52():
    return classical_gq("Qminus5", 2)


@pytest.fixture(scope="session")
def gq35():
    return t2_star(regular_hyperoval(4))


# ---------------------------------------------------------------------------- GROUPS


@pytest.fixture(scope="session")
def w32_group(w32):
    return induced_collineations(w32)


@pytest.fixture(scope="session")
def w33_group(w33):
    return induced_collineations(w33)


@pytest.fixture(scope="session")
def qminus52_group(qminus52):
    return induced_collineations(qminus52)


@pytest.fixture(scope="session")
def gq35_group(gq35):
    return induced_collineations(gq35)


@pytest.fixture(scope="session")
def gq35_graph(gq35):
    return incidence_graph(gq35)
