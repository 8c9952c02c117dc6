"""Maximal matchings: enumeration, size distribution and avm(G).

A matching is represented as a sorted tuple of edges of the host graph.
Enumeration is a depth-first include/exclude walk over the edges in index
order, so matchings come out in lexicographic order of their edge-index
tuples.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

from .errors import (CounterOverflow, EdgelessGraph, InvalidCore, NotAMatching,
                     TooManyEdges)
from .graph import Edge, Graph

EDGE_CAP = 64
ORACLE_EDGE_CAP = 20
U64_MAX = 2**64 - 1

Matching = tuple[Edge, ...]


def max_edges() -> int:
    """Enumeration edge cap; ``AVMLAB_MAX_EDGES`` may lower (never raise) it."""
    env = os.environ.get("AVMLAB_MAX_EDGES")
    if env:
        try:
            return max(0, min(EDGE_CAP, int(env)))
        except ValueError:
            pass
    return EDGE_CAP


@dataclass(frozen=True)
class MatchingDistribution:
    """``counts[i]`` is the number of maximal matchings with ``i`` edges."""

    counts: tuple[int, ...]
    m: int
    m_prime: int
    avm: Fraction

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> MatchingDistribution:
        counts = tuple(counts)
        while len(counts) > 1 and counts[-1] == 0:
            counts = counts[:-1]
        m = sum(counts)
        m_prime = sum(i * c for i, c in enumerate(counts))
        if m > U64_MAX or m_prime > U64_MAX:
            raise CounterOverflow("maximal matching totals exceed 64 bits")
        if m == 0:
            raise EdgelessGraph("no maximal matchings to average over")
        return cls(counts, m, m_prime, Fraction(m_prime, m))

    def count(self, size: int) -> int:
        return self.counts[size] if 0 <= size < len(self.counts) else 0

    @property
    def min_size(self) -> int:
        return next(i for i, c in enumerate(self.counts) if c)

    def to_dict(self) -> dict:
        return {
            "counts": list(self.counts),
            "m": self.m,
            "m_prime": self.m_prime,
            "avm": f"{self.avm.numerator}/{self.avm.denominator}",
        }


def _check_matching(g: Graph, matching: Iterable[Edge]) -> Matching:
    seen = 0
    edges = []
    for e in matching:
        u, v = sorted(e)
        if not g.has_edge(u, v):
            raise NotAMatching(f"({u}, {v}) is not an edge of the graph")
        em = (1 << u) | (1 << v)
        if seen & em:
            raise NotAMatching(f"edge ({u}, {v}) shares a vertex with another edge")
        seen |= em
        edges.append((u, v))
    return tuple(sorted(edges))


def is_maximal(g: Graph, matching: Iterable[Edge]) -> bool:
    """True iff no edge of ``g`` can be added, i.e. the matching dominates every edge."""
    edges = _check_matching(g, matching)
    covered = 0
    for u, v in edges:
        covered |= (1 << u) | (1 << v)
    return all(covered >> u & 1 or covered >> v & 1 for u, v in g.edges)


def _index_sets(g: Graph) -> Iterator[tuple[int, ...]]:
    edges = g.edges
    m = len(edges)
    if m > max_edges():
        raise TooManyEdges(f"{m} edges exceeds the enumeration cap of {max_edges()}")
    emask = [(1 << u) | (1 << v) for u, v in edges]
    last = [-1] * g.n
    for i, (u, v) in enumerate(edges):
        last[u] = last[v] = i
    chosen: list[int] = []

    def walk(i: int, covered: int):
        if i == m:
            for em in emask:
                if not covered & em:
                    return
            yield tuple(chosen)
            return
        em = emask[i]
        if covered & em:
            yield from walk(i + 1, covered)
            return
        chosen.append(i)
        yield from walk(i + 1, covered | em)
        chosen.pop()
        # an excluded, uncovered edge needs a later edge on one of its ends
        u, v = edges[i]
        if last[u] > i or last[v] > i:
            yield from walk(i + 1, covered)

    return walk(0, 0)


def enumerate_maximal(g: Graph) -> Iterator[Matching]:
    """Yield every maximal matching of ``g`` exactly once, in lexicographic
    order of edge-index tuples."""
    edges = g.edges
    for idx in _index_sets(g):
        yield tuple(edges[i] for i in idx)


def distribution(g: Graph) -> MatchingDistribution:
    if g.m == 0:
        raise EdgelessGraph("distribution needs at least one edge")
    counts = [0] * (g.n // 2 + 1)
    for idx in _index_sets(g):
        k = len(idx)
        if counts[k] == U64_MAX:
            raise CounterOverflow(f"count of size-{k} maximal matchings exceeds 64 bits")
        counts[k] += 1
    return MatchingDistribution.from_counts(counts)


def distribution_oracle(g: Graph) -> MatchingDistribution:
    """Brute force over all ``2**|E|`` edge subsets.

    Independent of :func:`distribution`: builds the coverage mask and the
    matching flag of every subset by doubling over the edges, then keeps the
    matchings that dominate every edge.
    """
    m = g.m
    if m > ORACLE_EDGE_CAP:
        raise TooManyEdges(f"oracle is limited to {ORACLE_EDGE_CAP} edges, got {m}")
    if m == 0:
        raise EdgelessGraph("distribution needs at least one edge")
    covered = np.zeros(1, dtype=np.uint64)
    ok = np.ones(1, dtype=bool)
    size = np.zeros(1, dtype=np.int64)
    for u, v in g.edges:
        em = np.uint64((1 << u) | (1 << v))
        ok = np.concatenate([ok, ok & ((covered & em) == 0)])
        covered = np.concatenate([covered, covered | em])
        size = np.concatenate([size, size + 1])
    maximal = ok
    for u, v in g.edges:
        em = np.uint64((1 << u) | (1 << v))
        maximal = maximal & ((covered & em) != 0)
    counts = np.bincount(size[maximal], minlength=g.n // 2 + 1)
    return MatchingDistribution.from_counts(int(c) for c in counts)


def pure_core_maximal(g: Graph, core_vertices: Iterable[int]) -> Iterator[Matching]:
    """Maximal matchings of ``g`` that use core edges only.

    ``core_vertices`` must induce a subgraph of minimum degree at least 2
    (the core of a cyclic graph).
    """
    core = set(core_vertices)
    if not core or any(not 0 <= v < g.n for v in core):
        raise InvalidCore("core vertices must be a non-empty subset of the vertex set")
    for v in core:
        if sum(1 for w in g.neighbors[v] if w in core) < 2:
            raise InvalidCore(f"vertex {v} has fewer than two neighbours inside the core")
    for matching in enumerate_maximal(g):
        if all(u in core and v in core for u, v in matching):
            yield matching


def covered_vertices(matching: Iterable[Edge]) -> set[int]:
    return {x for e in matching for x in e}
