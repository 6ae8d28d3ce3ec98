"""Recursive rank computation against the brute-force oracle."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from entrank.digraph import Digraph
from entrank.rank import rank

from conftest import (
    clique_edges,
    dg,
    dicycle_edges,
    random_edges,
    ucycle_edges,
    upath_edges,
)
from oracles import is_acyclic, rank_value


# Frozen expected values (oracle: oracles.rank_value).
UPATH_RANKS = [0, 1, 1, 2, 2, 2, 2, 3]  # n = 1..8


def test_empty_and_single():
    assert rank(Digraph(0, [])) == 0
    assert rank(Digraph(1, [])) == 0
    assert rank(Digraph(1, [(0, 0)])) == 1


def test_acyclic_iff_zero():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randrange(7)
        edges = random_edges(n, 0.4, rng)
        g = dg(n, edges)
        assert (rank(g) == 0) == is_acyclic(n, edges)


def test_undirected_path_log_law():
    for n in range(1, 9):
        assert rank(dg(n, upath_edges(n))) == UPATH_RANKS[n - 1]
    # the general law: floor(log2(n))
    for n in range(1, 20):
        assert rank(dg(n, upath_edges(n))) == n.bit_length() - 1


def test_cliques():
    for n in range(1, 6):
        assert rank(dg(n, clique_edges(n))) == n - 1


def test_cycles():
    for n in range(1, 7):
        assert rank(dg(n, dicycle_edges(n))) == 1
    assert [rank(dg(n, ucycle_edges(n))) for n in range(3, 7)] == [2, 2, 3, 3]


def test_disjoint_union_takes_max():
    # a 3-clique next to a directed 2-cycle: rank is the larger piece's
    edges = clique_edges(3) + [(3, 4), (4, 3)]
    assert rank(dg(5, edges)) == 2


def test_random_sweep_matches_oracle():
    rng = random.Random(99)
    for _ in range(150):
        n = rng.randrange(7)
        p = rng.choice([0.15, 0.3, 0.5])
        edges = random_edges(n, p, rng)
        assert rank(dg(n, edges)) == rank_value(n, tuple(edges))


@st.composite
def small_graphs(draw):
    n = draw(st.integers(0, 6))
    pairs = st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)))
    edges = sorted(set(draw(st.lists(pairs, max_size=14)))) if n else []
    return n, edges


@given(small_graphs())
@settings(max_examples=100, deadline=None)
def test_rank_matches_oracle_property(ne):
    n, edges = ne
    assert rank(dg(n, edges)) == rank_value(n, tuple(edges))


@given(small_graphs())
@settings(max_examples=60, deadline=None)
def test_rank_monotone_under_subgraphs(ne):
    n, edges = ne
    g = dg(n, edges)
    full = rank(g)
    for v in range(n):
        assert rank(g.remove_vertex(v)) <= full
