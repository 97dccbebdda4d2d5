import random
from pathlib import Path

import pytest

from indicated.graphs import parse_graph6

DATA = Path(__file__).parent / "data"


def load_corpus(name):
    return [parse_graph6(ln) for ln in (DATA / name).read_text().split()]


@pytest.fixture(scope="session")
def connected_le7():
    """All connected graphs on 1..7 vertices (996 graphs)."""
    return load_corpus("connected_le7.g6")


@pytest.fixture(scope="session")
def all_le6():
    """All graphs on 1..6 vertices (208 graphs)."""
    return load_corpus("all_le6.g6")


@pytest.fixture()
def rng():
    return random.Random(0xC0105)
