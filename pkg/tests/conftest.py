from __future__ import annotations

import itertools
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ratsing.dualgraph import LabelledTree, parse_tree
from ratsing.families import ade_tree, t9

DATA = Path(__file__).parent / "data"

# brute-force oracles have uneven per-example cost; fixed seed keeps runs repeatable
settings.register_profile(
    "repo", deadline=None, derandomize=True, suppress_health_check=[HealthCheck.filter_too_much]
)
settings.load_profile("repo")


def chain(weights) -> LabelledTree:
    names = [f"E{i}" for i in range(1, len(weights) + 1)]
    return LabelledTree.build(names, list(weights), list(zip(names, names[1:])))


def star(centre: int, leaves) -> LabelledTree:
    names = ["C"] + [f"L{i}" for i in range(1, len(leaves) + 1)]
    return LabelledTree.build(names, [centre, *leaves], [("C", v) for v in names[1:]])


def ade_trees():
    out = [ade_tree("A", k) for k in range(1, 9)]
    out += [ade_tree("D", k) for k in range(4, 9)]
    out += [ade_tree("E", k) for k in (6, 7, 8)]
    return out


def small_chains(max_len: int = 4):
    for k in range(1, max_len + 1):
        for ws in itertools.product((-2, -3, -4), repeat=k):
            yield chain(ws)


@st.composite
def random_trees(draw, min_size=1, max_size=8, weights=(-5, -2)):
    n = draw(st.integers(min_size, max_size))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    ws = [draw(st.integers(*weights)) for _ in range(n)]
    names = [f"E{i}" for i in range(1, n + 1)]
    edges = [(names[p], names[i]) for i, p in enumerate(parents, start=1)]
    return LabelledTree.build(names, ws, edges)


@pytest.fixture
def t9_tree() -> LabelledTree:
    return t9()


@pytest.fixture
def t9_text() -> str:
    return (DATA / "t9.tree").read_text()


@pytest.fixture
def t9_parsed(t9_text) -> LabelledTree:
    return parse_tree(t9_text)
