import random
from pathlib import Path

import pytest

from local_antimagic import Graph

DATA = Path(__file__).parent / "data"


def load_golden_matrix(name: str):
    """Golden label matrix file: one row per line, '*' for empty cells,
    the final token is the row sum."""
    rows = []
    for line in (DATA / name).read_text().splitlines():
        tokens = line.split()
        cells = [None if t == "*" else int(t) for t in tokens[:-1]]
        rows.append((cells, int(tokens[-1])))
    return rows


def random_connected_graph(rng: random.Random, n: int, extra_edges: int) -> Graph:
    """A random connected simple graph: a random spanning tree plus a few
    extra non-tree edges."""
    vertices = list(range(n))
    rng.shuffle(vertices)
    edges = set()
    for i in range(1, n):
        u = vertices[rng.randrange(i)]
        v = vertices[i]
        edges.add((min(u, v), max(u, v)))
    candidates = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in edges
    ]
    rng.shuffle(candidates)
    edges.update(candidates[:extra_edges])
    return Graph(n, tuple(sorted(edges)))


@pytest.fixture
def rng():
    return random.Random(20230817)
