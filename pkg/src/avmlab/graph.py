"""Immutable simple undirected graphs on dense vertex labels ``0..n-1``.

Adjacency is kept as one integer bitmask per vertex so the matching engine
can test coverage and domination with single ``&`` operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import EdgeNotInGraph, GraphError, NotConnected

MAX_VERTICES = 64

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A simple graph with vertex set ``range(n)``.

    ``edges`` may be given in any order and orientation; it is stored as a
    sorted tuple of ``(u, v)`` pairs with ``u < v``.  Loops, duplicate edges
    and out-of-range endpoints raise :class:`GraphError`.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        normalized = []
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= self.n:
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            normalized.append((u, v))
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise GraphError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Per-vertex neighbour bitsets."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(_bits(mask)) for mask in self.adjacency)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.adjacency)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adjacency[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertex set")
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def with_edges(self, extra: Iterable[Edge]) -> Graph:
        return Graph(self.n, self.edges + tuple(extra))

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``vertices``; also returns new-to-old labels."""
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        edges = tuple((new[u], new[v]) for u, v in self.edges if u in new and v in new)
        return Graph(len(old), edges), old

    def __str__(self):
        body = " ".join(f"{u}-{v}" for u, v in self.edges)
        return f"Graph(n={self.n}: {body})"


class VertexRole(NamedTuple):
    is_leaf: bool
    is_support: bool
    degree: int


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_vertices(mask: int) -> list[int]:
    return list(_bits(mask))


def components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp_mask = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adjacency[v]
            frontier = nxt & ~comp_mask
            comp_mask |= frontier
        seen |= comp_mask
        comps.append(mask_to_vertices(comp_mask))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def cyclomatic_number(g: Graph) -> int:
    """|E| - |V| + 1 for a connected graph."""
    if not is_connected(g):
        raise NotConnected("cyclomatic number is only defined here for connected graphs")
    return g.m - g.n + 1


def vertex_roles(g: Graph) -> list[VertexRole]:
    deg = g.degrees
    roles = []
    for v in range(g.n):
        roles.append(VertexRole(
            is_leaf=deg[v] == 1,
            is_support=any(deg[w] == 1 for w in g.neighbors[v]),
            degree=deg[v],
        ))
    return roles


def leaf_neighbors(g: Graph, v: int) -> list[int]:
    return [w for w in g.neighbors[v] if g.degrees[w] == 1]


def edge_dominates(g: Graph, e: Edge, f: Edge) -> bool:
    """True iff the edges share an endpoint; every edge dominates itself."""
    for x in (e, f):
        if not g.has_edge(*x):
            raise EdgeNotInGraph(f"{tuple(x)} is not an edge of the graph")
    return bool(set(e) & set(f))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))
