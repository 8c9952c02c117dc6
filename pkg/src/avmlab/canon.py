"""Canonical labeling of small graphs.

The canonical form is the smallest upper-triangle adjacency bitstring
(graph6 column order) over the vertex orders reachable by colour
refinement plus individualisation.  Every choice in the search depends
only on colours, never on vertex names, so isomorphic inputs explore the
same set of bitstrings.

Twins (vertices with equal neighbourhoods apart from each other) are
swapped by an automorphism that fixes every colour class, so only one
vertex per twin class is individualised in each cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import OutOfRange
from .formats import to_graph6
from .graph import Graph

MAX_CANON_VERTICES = 16


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """``bits`` holds x(0,1), x(0,2), x(1,2), ... with x(0,1) as the most
    significant bit, so integer order equals bitstring order."""

    n: int
    bits: int

    def bitstring(self) -> str:
        total = self.n * (self.n - 1) // 2
        return format(self.bits, f"0{total}b") if total else ""

    def graph(self) -> Graph:
        total = self.n * (self.n - 1) // 2
        edges = []
        k = 0
        for v in range(1, self.n):
            for u in range(v):
                if self.bits >> (total - 1 - k) & 1:
                    edges.append((u, v))
                k += 1
        return Graph(self.n, tuple(edges))

    def graph6(self) -> str:
        return to_graph6(self.graph())

    def __str__(self):
        return self.graph6()


def _code(g: Graph, position: list[int]) -> int:
    total = g.n * (g.n - 1) // 2
    code = 0
    for u, v in g.edges:
        a, b = position[u], position[v]
        if a > b:
            a, b = b, a
        code |= 1 << (total - 1 - (b * (b - 1) // 2 + a))
    return code


def _refine(nbrs, colors: list[int]) -> list[int]:
    """Iterate (colour, sorted neighbour colours) to a stable partition.

    Colours are renumbered by sorting signatures, which keeps the map
    label-independent; old colour order is preserved because the old colour
    leads each signature.
    """
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in nbrs[v]))) for v in range(len(colors))]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            return colors
        ncolors = len(ranking)


def _twin_classes(g: Graph) -> list[int]:
    """Map each vertex to the smallest vertex of its twin class."""
    rep = list(range(g.n))
    adj = g.adjacency
    for v in range(g.n):
        for w in range(v):
            if rep[w] != w:
                continue
            pair = (1 << v) | (1 << w)
            if adj[v] & ~pair == adj[w] & ~pair:
                rep[v] = w
                break
    return rep


def canonical_labeling(g: Graph) -> tuple[CanonicalForm, list[int]]:
    """Return the canonical form and ``position`` with ``position[v]`` the
    canonical index of vertex ``v``."""
    n = g.n
    if n > MAX_CANON_VERTICES:
        raise OutOfRange(f"canonical labeling supports n <= {MAX_CANON_VERTICES}, got {n}")
    if n <= 1:
        return CanonicalForm(n, 0), list(range(n))
    nbrs = g.neighbors
    twin = _twin_classes(g)
    best_code = None
    best_pos = None

    def search(colors: list[int]):
        nonlocal best_code, best_pos
        colors = _refine(nbrs, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            code = _code(g, colors)
            if best_code is None or code < best_code:
                best_code, best_pos = code, colors
            return
        target = min(c for c, members in cells.items() if len(members) > 1)
        tried = set()
        for v in cells[target]:
            if twin[v] in tried:
                continue
            tried.add(twin[v])
            # v gets the lowest slot of its cell; everything else keeps order
            split = [2 * c + (0 if (c != target or u == v) else 1) for u, c in enumerate(colors)]
            search(split)

    search(list(g.degrees))
    return CanonicalForm(n, best_code), best_pos


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    form, position = canonical_labeling(g)
    return g.relabel(position)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees) != sorted(b.degrees):
        for h in (a, b):
            if h.n > MAX_CANON_VERTICES:
                raise OutOfRange(f"canonical labeling supports n <= {MAX_CANON_VERTICES}")
        return False
    return canonical_form(a) == canonical_form(b)


def brute_force_form(g: Graph) -> CanonicalForm:
    """Minimum code over all ``n!`` vertex orders (oracle, small n only)."""
    best = None
    for perm in permutations(range(g.n)):
        code = _code(g, list(perm))
        if best is None or code < best:
            best = code
    return CanonicalForm(g.n, best if best is not None else 0)
