import random

import pytest

from edgeideals.atlas import random_graph
from edgeideals.graphs import Graph, isolated_vertices


def random_graphs(count, max_n, seed, isolate_free=False, min_n=1):
    """Deterministic mixed-density corpus used across test modules."""
    rng = random.Random(seed)
    probs = (0.15, 0.3, 0.5, 0.7, 0.85)
    out = []
    while len(out) < count:
        n = rng.randint(min_n, max_n)
        g = random_graph(n, probs[len(out) % len(probs)], rng.randrange(2 ** 62))
        if isolate_free and (g.n == 0 or isolated_vertices(g)):
            continue
        out.append(g)
    return out


@pytest.fixture(scope="session")
def small_corpus():
    return random_graphs(120, 8, seed=20240601)


@pytest.fixture(scope="session")
def isolate_free_corpus():
    return random_graphs(80, 8, seed=20240602, isolate_free=True, min_n=2)
