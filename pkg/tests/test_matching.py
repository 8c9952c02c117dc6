import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from avmlab.errors import (CounterOverflow, EdgelessGraph, InvalidCore, NotAMatching,
                           TooManyEdges)
from avmlab.generators import FamilySpec, build
from avmlab.graph import Graph, cycle_graph, path_graph, star_graph
from avmlab.matching import (MatchingDistribution, U64_MAX, distribution, distribution_oracle,
                             enumerate_maximal, is_maximal, max_edges, pure_core_maximal)

from oracles import brute_matchings, random_connected


def test_small_cases_by_hand():
    # P4: {12} and {01, 23}
    assert list(enumerate_maximal(path_graph(4))) == [((0, 1), (2, 3)), ((1, 2),)]
    d = distribution(path_graph(4))
    assert d.counts == (0, 1, 1) and d.m == 2 and d.m_prime == 3 and d.avm == Fraction(3, 2)
    # a star has one maximal matching per edge
    assert distribution(star_graph(5)).counts == (0, 5)
    # C6: 2 perfect matchings and 3 of size 2
    assert distribution(cycle_graph(6)).counts == (0, 0, 3, 2)


def test_theta5():
    d = distribution(build(FamilySpec.theta(n=5)))
    assert (d.m, d.m_prime, d.avm) == (5, 9, Fraction(9, 5))


def test_lexicographic_order():
    g = build(FamilySpec.dumbbell(n=8))
    idx = [tuple(g.edge_index[e] for e in mm) for mm in enumerate_maximal(g)]
    assert idx == sorted(idx)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.integers(0, 6), st.integers(0, 2**31))
def test_enumeration_matches_subset_oracle(n, extra, seed):
    g = random_connected(random.Random(seed), n, n - 1 + extra)
    got = list(enumerate_maximal(g))
    assert len(got) == len(set(got))
    assert {frozenset(mm) for mm in got} == set(brute_matchings(g))
    assert distribution(g) == distribution_oracle(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.integers(0, 8), st.integers(0, 2**31))
def test_every_output_is_maximal(n, extra, seed):
    g = random_connected(random.Random(seed), n, n - 1 + extra)
    for mm in enumerate_maximal(g):
        assert is_maximal(g, mm)
        # maximal means every edge is dominated
        cov = {x for e in mm for x in e}
        assert all(u in cov or v in cov for u, v in g.edges)


def test_is_maximal_rejects_non_matchings():
    g = path_graph(4)
    assert not is_maximal(g, [(0, 1)])
    with pytest.raises(NotAMatching):
        is_maximal(g, [(0, 1), (1, 2)])
    with pytest.raises(NotAMatching):
        is_maximal(g, [(0, 2)])


def test_edgeless():
    with pytest.raises(EdgelessGraph):
        distribution(Graph(3))
    with pytest.raises(EdgelessGraph):
        distribution_oracle(Graph(3))


def test_edge_caps(monkeypatch):
    g = path_graph(30)
    with pytest.raises(TooManyEdges):
        distribution_oracle(g)
    monkeypatch.setenv("AVMLAB_MAX_EDGES", "10")
    assert max_edges() == 10
    with pytest.raises(TooManyEdges):
        distribution(g)
    monkeypatch.setenv("AVMLAB_MAX_EDGES", "1000")
    assert max_edges() == 64


def test_counter_overflow():
    with pytest.raises(CounterOverflow):
        MatchingDistribution.from_counts([0, U64_MAX, 1])
    d = MatchingDistribution.from_counts([0, 3, 0, 0])
    assert d.counts == (0, 3) and d.min_size == 1 and d.count(7) == 0


def test_to_dict():
    assert distribution(build(FamilySpec.theta(n=5))).to_dict() == {
        "counts": [0, 1, 4], "m": 5, "m_prime": 9, "avm": "9/5"}


def test_pure_core():
    # theta(3,3,1) with one leaf on u: pure-core maximal matchings must cover u
    g = build(FamilySpec.theta(attach={"u": 1}))
    pure = list(pure_core_maximal(g, range(4)))
    assert all(0 in {x for e in mm for x in e} for mm in pure)
    assert {frozenset(mm) for mm in pure} == {
        frozenset(mm) for mm in brute_matchings(g) if all(max(e) < 4 for e in mm)}
    with pytest.raises(InvalidCore):
        list(pure_core_maximal(g, [0, 4]))
    with pytest.raises(InvalidCore):
        list(pure_core_maximal(g, []))


def test_bowtie_has_no_size_one_matching():
    for n in range(5, 10):
        for v in ("u", "v1", "v2"):
            g = build(FamilySpec.bowtie(attach={v: n - 5}))
            assert distribution(g).count(1) == 0
