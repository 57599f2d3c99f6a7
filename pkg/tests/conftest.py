from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from heckebraid.braid import BraidWord


def random_braid(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1)))
                              for _ in range(length)))


@st.composite
def braids(draw, min_n=2, max_n=5, max_len=40, n=None):
    n = n if n is not None else draw(st.integers(min_n, max_n))
    letters = draw(st.lists(st.tuples(st.integers(1, n - 1), st.sampled_from((1, -1))),
                            max_size=max_len))
    return BraidWord(n, tuple(letters))


@pytest.fixture
def rng():
    return random.Random(20240607)
