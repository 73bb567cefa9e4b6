"""Shared test data and instance generators."""

import random

from hypothesis import strategies as st

from ldh import build

# worked examples, vertex v_i stored as i-1
THREE_EDGE_EXAMPLE = [[0, 1, 2, 3], [0, 3, 4, 5, 6], [1, 2, 3, 4, 7, 8, 9]]
TAIL_EXAMPLE = [[0, 1, 2, 3], [3, 4]]
SQUARE_EXAMPLE = [[0, 1, 2, 3], [2, 3, 4, 5], [0, 1, 4, 5]]
TREE_EXAMPLE = [[0, 1, 2, 3], [3, 4, 5], [5, 6, 7, 8, 9]]

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE_RESULTS = {}


def _repair(n, edges, pick):
    """Make the edge family covering, connected and Sperner."""
    edges = [set(e) for e in edges]
    for v in range(n):
        if not any(v in e for e in edges):
            edges[pick(len(edges))].add(v)
    while True:
        comp = {0}
        grew = True
        while grew:
            grew = False
            for e in edges:
                if e & comp and not e <= comp:
                    comp |= e
                    grew = True
        if len(comp) == n:
            break
        outside = min(set(range(n)) - comp)
        inside = [e for e in edges if e & comp]
        inside[pick(len(inside))].add(outside)
    keep = []
    for i, e in enumerate(edges):
        dominated = any(
            (e < f) or (e == f and j < i) for j, f in enumerate(edges) if j != i
        )
        if not dominated:
            keep.append(sorted(e))
    return build(n, keep)


def random_hypergraph(rng: random.Random, n_max=10, m_max=6):
    n = rng.randint(2, n_max)
    m = rng.randint(1, m_max)
    edges = [rng.sample(range(n), rng.randint(2, min(n, 5))) for _ in range(m)]
    return _repair(n, edges, lambda k: rng.randrange(k))


def random_corpus(count, seed, n_max=10, m_max=6):
    rng = random.Random(seed)
    return [random_hypergraph(rng, n_max, m_max) for _ in range(count)]


@st.composite
def hypergraphs(draw, n_max=8, m_max=5):
    n = draw(st.integers(2, n_max))
    m = draw(st.integers(1, m_max))
    edges = [
        draw(st.sets(st.integers(0, n - 1), min_size=2, max_size=min(n, 5)))
        for _ in range(m)
    ]
    return _repair(n, edges, lambda k: draw(st.integers(0, k - 1)))
