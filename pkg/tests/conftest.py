import json
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from cellposet.graphs import ColoredGraph, graph_from_dict, is_admissible

settings.register_profile("suite", max_examples=30, deadline=None)
settings.load_profile("suite")

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def torus_graph() -> ColoredGraph:
    return graph_from_dict(json.loads((DATA / "torus_crystallization.json").read_text()))


@st.composite
def admissible_graphs(draw, max_pairs: int = 4, colors=(2, 3)):
    """Random small admissible graphs: d shuffled perfect matchings on an
    even vertex set, discarded unless connected."""
    d = draw(st.sampled_from(colors))
    k = draw(st.integers(min_value=2, max_value=max_pairs))
    n = 2 * k
    labels = tuple(f"v{i}" for i in range(n))
    edges = []
    for c in range(1, d + 1):
        perm = draw(st.permutations(range(n)))
        for i in range(k):
            edges.append((labels[perm[2 * i]], labels[perm[2 * i + 1]], c))
    g = ColoredGraph(d, labels, tuple(edges))
    from hypothesis import assume
    assume(is_admissible(g))
    return g
