"""Cores of connected bicyclic graphs and their classification.

A connected graph with ``|E| = |V| + 1`` has a 2-core of one of three
shapes:

* theta: two branch vertices joined by three internally disjoint paths of
  lengths ``t1 <= t2 <= t3``; reported as ``(p, q, l) = (t1+t2, t1+t3, t1)``;
* bowtie: two cycles through one vertex of core-degree 4;
* dumbbell: two disjoint cycles plus the path of length ``r`` joining them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import NotBicyclic, NotConnected
from .graph import Graph, is_connected

THETA, BOWTIE, DUMBBELL = "theta", "bowtie", "dumbbell"


@dataclass(frozen=True)
class CoreDescriptor:
    kind: str
    params: tuple[int, ...]
    core_vertices: frozenset[int]
    core_edges: frozenset[tuple[int, int]]
    # theta: sorted branch path lengths; others: empty
    branch_lengths: tuple[int, ...] = ()
    # branch / junction / centre vertices, in naming order
    anchors: tuple[int, ...] = field(default=(), compare=False)

    @property
    def p(self) -> int:
        return self.params[0]

    @property
    def q(self) -> int:
        return self.params[1]

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind, "p": self.p, "q": self.q}
        if self.kind == THETA:
            out["l"] = self.params[2]
            out["branch_lengths"] = list(self.branch_lengths)
        elif self.kind == DUMBBELL:
            out["r"] = self.params[2]
        out["core"] = sorted(self.core_vertices)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def label(self) -> str:
        return f"{self.kind}{self.params}"


@dataclass(frozen=True)
class AttachmentProfile:
    """Direct pendant-edge counts per core vertex.

    ``other_off_core`` counts non-core vertices that are not leaves hanging
    directly on the core, so ``sum(pendants.values()) + other_off_core``
    equals ``n - |core|``.
    """

    pendants: dict[int, int]
    off_core_support: bool
    other_off_core: int

    def to_dict(self) -> dict:
        return {
            "pendants": {str(v): c for v, c in sorted(self.pendants.items())},
            "off_core_support": self.off_core_support,
            "other_off_core": self.other_off_core,
        }


def _require_bicyclic(g: Graph):
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    if g.m != g.n + 1:
        raise NotBicyclic(f"expected {g.n + 1} edges for a bicyclic graph on {g.n} vertices, got {g.m}")


def two_core(g: Graph) -> frozenset[int]:
    """Repeatedly strip vertices of degree <= 1; return the survivors."""
    _require_bicyclic(g)
    deg = list(g.degrees)
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for w in g.neighbors[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    return frozenset(v for v in range(g.n) if alive[v])


def _walk(core_nbrs: dict[int, list[int]], start: int, first: int) -> tuple[int, list[int]]:
    """Follow a chain of core-degree-2 vertices from ``start`` via ``first``.

    Returns the end vertex (core-degree >= 3, possibly ``start``) and the
    interior vertices passed on the way.
    """
    prev, cur = start, first
    interior = []
    while len(core_nbrs[cur]) == 2:
        interior.append(cur)
        a, b = core_nbrs[cur]
        prev, cur = cur, (b if a == prev else a)
    return cur, interior


def classify(g: Graph) -> CoreDescriptor:
    core = two_core(g)
    core_edges = frozenset(e for e in g.edges if e[0] in core and e[1] in core)
    nbrs = {v: [w for w in g.neighbors[v] if w in core] for v in sorted(core)}
    branch = [v for v in sorted(core) if len(nbrs[v]) >= 3]

    if len(branch) == 1:
        centre = branch[0]
        cycles = []
        used = set()
        for w in nbrs[centre]:
            if w in used:
                continue
            end, interior = _walk(nbrs, centre, w)
            last = interior[-1] if interior else w
            used.update({w, last})
            cycles.append(len(interior) + 1)
        p, q = sorted(cycles)
        return CoreDescriptor(BOWTIE, (p, q), core, core_edges, anchors=(centre,))

    if len(branch) != 2:
        raise NotBicyclic("core has an unexpected shape")
    b1, b2 = branch
    walks = [_walk(nbrs, b1, w) for w in nbrs[b1]]
    to_b2 = [len(interior) + 1 for end, interior in walks if end == b2]
    if len(to_b2) == 3:
        t1, t2, t3 = sorted(to_b2)
        return CoreDescriptor(THETA, (t1 + t2, t1 + t3, t1), core, core_edges,
                              branch_lengths=(t1, t2, t3), anchors=(b1, b2))
    # dumbbell: one walk is the bridge path, the other two trace the same cycle
    r = to_b2[0]
    loop_b1 = next(len(interior) + 1 for end, interior in walks if end == b1)
    loop_b2 = next(len(interior) + 1 for end, interior in
                   (_walk(nbrs, b2, w) for w in nbrs[b2]) if end == b2)
    p, q = sorted((loop_b1, loop_b2))
    anchors = (b1, b2) if loop_b1 <= loop_b2 else (b2, b1)
    return CoreDescriptor(DUMBBELL, (p, q, r), core, core_edges, anchors=anchors)


def attachment_profile(g: Graph, core: CoreDescriptor | None = None) -> AttachmentProfile:
    if core is None:
        core = classify(g)
    cv = core.core_vertices
    deg = g.degrees
    pendants = {}
    direct = 0
    for v in sorted(cv):
        c = sum(1 for w in g.neighbors[v] if deg[w] == 1 and w not in cv)
        if c:
            pendants[v] = c
            direct += c
    off_support = any(
        v not in cv and any(deg[w] == 1 for w in g.neighbors[v]) for v in range(g.n))
    return AttachmentProfile(pendants, off_support, g.n - len(cv) - direct)


def _path_names(prefix: str, interior: list[int]) -> dict[int, str]:
    if len(interior) == 1:
        return {interior[0]: prefix}
    return {v: f"{prefix}{i}" for i, v in enumerate(interior, start=1)}


def core_names(g: Graph, core: CoreDescriptor | None = None) -> dict[int, str]:
    """Name core vertices after the conventions used for the named families.

    theta: branch vertices ``u``, ``v``; interiors of the shortest branch path
    ``s1..``, of the next ``x1..``, of the longest ``y1..`` (a lone interior
    vertex drops the index: ``x``, ``y``, ``u``).  bowtie: centre
    ``u``, shorter cycle ``v1..``, longer cycle ``w1..``.  dumbbell: shorter
    cycle ``v1..vp`` with junction ``vp``, bridge interior ``u1..``, longer
    cycle ``w1..wq`` with junction ``w1``.  Cycles are walked starting from
    the pendant-heavier end and ties between equal paths go to the heavier
    one, so names are deterministic but only unique up to the core's
    symmetries.
    """
    if core is None:
        core = classify(g)
    cv = core.core_vertices
    nbrs = {v: sorted(w for w in g.neighbors[v] if w in cv) for v in cv}
    names: dict[int, str] = {}

    deg = g.degrees
    weight = {v: sum(1 for w in g.neighbors[v] if w not in cv and deg[w] == 1) for v in cv}

    def walks_from(start):
        seen = set()
        out = []
        for w in nbrs[start]:
            if w in seen:
                continue
            end, interior = _walk(nbrs, start, w)
            seen.update(interior[:1] + interior[-1:] or [w])
            if end == start:
                # walk a cycle so that pendant-heavy vertices come first
                back = interior[::-1]
                if [weight[v] for v in back] > [weight[v] for v in interior]:
                    interior = back
            out.append((end, interior))
        return out

    def order(walks):
        return sorted(walks, key=lambda iv: (len(iv), [-weight[v] for v in iv]))

    if core.kind == THETA:
        b1, b2 = core.anchors
        names[b1], names[b2] = "u", "v"
        paths = order(interior for _, interior in walks_from(b1))
        for prefix, interior in zip(("s", "x", "y"), paths):
            names.update(_path_names(prefix, interior))
    elif core.kind == BOWTIE:
        (centre,) = core.anchors
        names[centre] = "u"
        cycles = order(interior for _, interior in walks_from(centre))
        for prefix, interior in zip(("v", "w"), cycles):
            for i, v in enumerate(interior, start=1):
                names[v] = f"{prefix}{i}"
    else:
        jv, jw = core.anchors
        p, q, r = core.params
        for end, interior in walks_from(jv):
            if end == jv:
                for i, v in enumerate(interior, start=1):
                    names[v] = f"v{i}"
            else:
                names.update(_path_names("u", interior))
        names[jv] = f"v{p}"
        names[jw] = "w1"
        for end, interior in walks_from(jw):
            if end == jw:
                for i, v in enumerate(interior, start=2):
                    names[v] = f"w{i}"
    return names
