import random

import pytest
from hypothesis import strategies as st

from gridmatch.graphs import Graph, V


def random_graph(rng: random.Random, max_vertices: int = 11) -> Graph:
    n = rng.randint(1, max_vertices)
    verts = [V("p", i) for i in range(1, n + 1)]
    edges = []
    p = rng.uniform(0.1, 0.7)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((verts[i], verts[j]))
    return Graph.from_edges(verts, edges)


def random_graph_corpus(seed: int, count: int, max_vertices: int = 11):
    rng = random.Random(seed)
    return [random_graph(rng, max_vertices) for _ in range(count)]


@st.composite
def graphs(draw, max_vertices: int = 8):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    verts = [V("p", i) for i in range(1, n + 1)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return Graph.from_edges(verts, [(verts[i], verts[j]) for i, j in chosen])


@pytest.fixture
def rng():
    return random.Random(20240811)
