import random
from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from kernelkit import Graph

settings.register_profile("suite", derandomize=True, deadline=None)
settings.load_profile("suite")


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


@pytest.fixture
def rng():
    return random.Random(20240601)
