import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graphtoric.graph_core import TrivalentGraph, multi_theta
from graphtoric.lattice_fan import build_lattice, delzant_check
from graphtoric.polytope import build_hrep, enumerate_vertices, facet_defining_rows


@pytest.fixture(scope="session")
def theta2():
    return multi_theta(2)


@pytest.fixture(scope="session")
def theta3():
    return multi_theta(3)


@pytest.fixture(scope="session")
def theta4():
    return multi_theta(4)


@pytest.fixture(scope="session")
def dumbbell():
    return TrivalentGraph(2, ((0, 0), (0, 1), (1, 1)))


@pytest.fixture(scope="session")
def k4():
    return TrivalentGraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))


class Bundle:
    """One graph taken through the whole pipeline, computed once."""

    def __init__(self, graph):
        self.graph = graph
        self.h = build_hrep(graph)
        self.v = enumerate_vertices(self.h)
        self.facet_rows = facet_defining_rows(self.h, self.v)
        self.lattice = build_lattice(graph)
        self.verdict = delzant_check(self.h, self.v, self.lattice, self.facet_rows)


@pytest.fixture(scope="session")
def bundles(theta2, theta3, theta4, dumbbell, k4):
    return {
        "theta2": Bundle(theta2),
        "theta3": Bundle(theta3),
        "theta4": Bundle(theta4),
        "dumbbell": Bundle(dumbbell),
        "k4": Bundle(k4),
    }
