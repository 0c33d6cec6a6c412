import pytest

from mapkit.graph_core.witness_io import parse_witness
from mapkit.testbench.generators import grid, star
from tests.helpers import STAR4_TEXT, pipeline, witness_from_cliques


@pytest.fixture
def star4():
    return parse_witness(STAR4_TEXT, name="star4.tmap")


@pytest.fixture
def star4_instance(star4):
    # nations first, the centre last: every leaf bag hangs below the centre
    return pipeline(star4, order=list(range(star4.vertex_count)))


@pytest.fixture
def grid3_instance():
    return pipeline(grid(3, 3))


@pytest.fixture
def two_triangles_instance():
    return pipeline(witness_from_cliques(6, [(0, 1, 2), (3, 4, 5)]))


@pytest.fixture
def star_instance():
    def build(leaves: int):
        return pipeline(star(leaves))

    return build
