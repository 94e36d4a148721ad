import random

import pytest
from hypothesis import strategies as st

from timwidth.core import TemporalGraph


def random_graph(rng, n_max=6, lam_max=4, p=0.35, max_times=2, n_min=1):
    n = rng.randint(n_min, n_max)
    lam = rng.randint(1, lam_max)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                count = rng.randint(1, min(max_times, lam))
                for t in rng.sample(range(1, lam + 1), count):
                    edges.append((u, v, t))
    return TemporalGraph(n, edges)


@st.composite
def temporal_graphs(draw, n_max=5, lam_max=4):
    n = draw(st.integers(min_value=1, max_value=n_max))
    lam = draw(st.integers(min_value=0, max_value=lam_max))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = []
    for u, v in pairs:
        times = draw(
            st.sets(st.integers(min_value=1, max_value=max(lam, 1)), max_size=lam)
        ) if lam else set()
        for t in times:
            edges.append((u, v, t))
    return TemporalGraph(n, edges)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
