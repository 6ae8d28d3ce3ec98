"""Seeded corpora: spec parsing, determinism, family shapes."""

import pytest

from entrank.corpus import CorpusSpec, FAMILIES, family_graph, generate_corpus


def test_parse_random_roundtrip():
    spec = CorpusSpec.parse("random:n=6,p=0.3,seed=42,count=100")
    assert (spec.n, spec.p, spec.seed, spec.count) == (6, 0.3, 42, 100)
    assert spec.canonical == "random:n=6,p=0.3,seed=42,count=100"
    assert CorpusSpec.parse(spec.canonical) == spec


def test_parse_family_roundtrip():
    spec = CorpusSpec.parse("family:name=upath,size=8")
    assert (spec.name, spec.size) == ("upath", 8)
    assert CorpusSpec.parse(spec.canonical) == spec


def test_parse_defaults_and_whitespace():
    spec = CorpusSpec.parse("random: n=3 , p=0.5 ")
    assert (spec.seed, spec.count) == (0, 1)


def test_parse_errors():
    for bad in [
        "bogus:n=3",
        "random",
        "random:p=0.5",  # n missing
        "random:n=3,p=0.5,extra=1",
        "random:n=3,p=2.0",
        "random:n=3,p=0.1,count=0",
        "random:n=-1,p=0.1",
        "family:name=nope,size=3",
        "family:name=upath,size=0",
        "family:name=upath",
        "random:n=3,p",
    ]:
        with pytest.raises(ValueError):
            CorpusSpec.parse(bad)


def test_random_corpus_is_deterministic():
    a = generate_corpus("random:n=5,p=0.4,seed=7,count=20")
    b = generate_corpus("random:n=5,p=0.4,seed=7,count=20")
    assert [(gid, g.n, sorted(g.edges)) for gid, g in a] == [
        (gid, g.n, sorted(g.edges)) for gid, g in b
    ]
    c = generate_corpus("random:n=5,p=0.4,seed=8,count=20")
    assert [sorted(g.edges) for _, g in a] != [sorted(g.edges) for _, g in c]


def test_random_corpus_ids_and_extremes():
    graphs = generate_corpus("random:n=4,p=0,seed=1,count=3")
    assert [gid for gid, _ in graphs] == [
        "random-1-0000",
        "random-1-0001",
        "random-1-0002",
    ]
    assert all(g.edge_count() == 0 for _, g in graphs)
    full = generate_corpus("random:n=4,p=1,seed=1,count=1")[0][1]
    assert full.edge_count() == 16  # self-loops included


def test_family_shapes():
    assert family_graph("dipath", 4).edge_count() == 3
    assert family_graph("dicycle", 1).edges == frozenset({(0, 0)})
    assert family_graph("dicycle", 4).edge_count() == 4
    assert family_graph("upath", 3).edge_count() == 4
    # the 2-cycle's two antiparallel arcs must not be double-counted
    assert family_graph("ucycle", 2).edge_count() == 2
    assert family_graph("ucycle", 5).edge_count() == 10
    assert family_graph("clique", 4).edge_count() == 12
    dag = family_graph("dag", 4)
    assert dag.edge_count() == 6
    assert all(u < v for u, v in dag.edges)


def test_family_corpus_single_member():
    graphs = generate_corpus("family:name=clique,size=3")
    assert len(graphs) == 1
    gid, g = graphs[0]
    assert gid == "clique-3"
    assert g.n == 3


def test_family_registry_is_exhaustive():
    assert sorted(FAMILIES) == [
        "clique",
        "dag",
        "dicycle",
        "dipath",
        "ucycle",
        "upath",
    ]
    with pytest.raises(ValueError, match="unknown family"):
        family_graph("grid", 3)
