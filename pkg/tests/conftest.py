import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dss import Digraph, ProblemKind, WeightedInstance

# Worked 8-node oriented tree used throughout: nodes v1..v8 as ids 0..7.
FIG_A_ARCS = [(0, 1), (2, 0), (1, 3), (4, 1), (2, 5), (6, 2), (7, 2)]

# Second worked tree, with its canonical weights (v1..v8).
FIG_B_ARCS = [(7, 4), (4, 3), (4, 1), (7, 6), (6, 5), (6, 2), (6, 0)]
FIG_B_WEIGHTS = (1, 1, 2, 2, 1, 3, 2, 3)

# 4-regular 8-node graph containing the 4-clique {2,3,4,5} (0-indexed).
REGULAR8_EDGES = [
    (0, 1), (0, 3), (0, 6), (0, 7),
    (1, 2), (1, 6), (1, 7),
    (2, 3), (2, 4), (2, 5),
    (3, 4), (3, 5),
    (4, 5), (4, 7),
    (5, 6),
    (6, 7),
]

C5_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]


@pytest.fixture
def fig_a() -> Digraph:
    return Digraph(8, FIG_A_ARCS)


@pytest.fixture
def fig_b() -> Digraph:
    return Digraph(8, FIG_B_ARCS)


@pytest.fixture
def fig_b_instance() -> WeightedInstance:
    return WeightedInstance(
        Digraph(8, FIG_B_ARCS), FIG_B_WEIGHTS, 4, ProblemKind.MAXIMAL_SSG
    )


def make_instance(g: Digraph, weights, budget, kind=ProblemKind.SSG):
    return WeightedInstance(g, tuple(weights), budget, kind)
