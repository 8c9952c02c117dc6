"""Named bicyclic families and exhaustive generation up to isomorphism.

Vertex numbering of the named families (core first, then leaves grouped by
support vertex in core order):

theta(p, q, l)
    ``u = 0`` and ``v = 1`` are the branch vertices; then the interior of
    the shared u-v path of length ``l`` (``s1, s2, ..``), then the interior
    of the path closing ``C_p`` (``x1, ..``) and of the path closing ``C_q``
    (``y1, ..``).  A lone interior vertex drops its index, so the core of
    theta(3, 3, 1) is ``u=0, v=1, x=2, y=3``.  Default leaves go on ``u``.
bowtie(p, q)
    centre ``u = 0``; ``v1..v(p-1)`` around ``C_p``; ``w1..w(q-1)`` around
    ``C_q``.  Default leaves go on ``v1``.
dumbbell(p, q, r)
    ``v1..vp`` around ``C_p`` with junction ``vp``; bridge interior
    ``u1..u(r-1)`` (``u`` when ``r = 2``); ``w1..wq`` around ``C_q`` with
    junction ``w1``.  Default leaves go on ``vp``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Mapping

from .canon import CanonicalForm, canonical_form
from .errors import InfeasibleSpec, OutOfRange
from .graph import Graph
from .structure import BOWTIE, DUMBBELL, THETA, CoreDescriptor

FAMILIES = (THETA, BOWTIE, DUMBBELL)


@dataclass(frozen=True)
class FamilySpec:
    """A core shape, an order ``n`` and a leaf placement.

    ``attach`` maps core vertices (by name or index) to pendant-edge counts.
    With ``attach=None`` all ``k = n - |core|`` leaves go on the family's
    default vertex; with ``n=None`` the order is the core size plus the
    attached leaves.
    """

    kind: str
    params: tuple[int, ...]
    n: int | None = None
    attach: Mapping[str | int, int] | None = field(default=None, hash=False)

    @classmethod
    def theta(cls, p=3, q=3, l=1, n=None, attach=None):
        return cls(THETA, (p, q, l), n, attach)

    @classmethod
    def bowtie(cls, p=3, q=3, n=None, attach=None):
        return cls(BOWTIE, (p, q), n, attach)

    @classmethod
    def dumbbell(cls, p=3, q=3, r=1, n=None, attach=None):
        return cls(DUMBBELL, (p, q, r), n, attach)

    @classmethod
    def core_only(cls, descriptor: CoreDescriptor):
        return cls(descriptor.kind, descriptor.params)

    def canonical_params(self) -> tuple[int, ...]:
        """Parameters as :func:`avmlab.structure.classify` reports them."""
        if self.kind == THETA:
            p, q, l = self.params
            t1, t2, t3 = sorted((l, p - l, q - l))
            return (t1 + t2, t1 + t3, t1)
        if self.kind == BOWTIE:
            return tuple(sorted(self.params))
        p, q, r = self.params
        return (min(p, q), max(p, q), r)


def _indexed(prefix: str, count: int, start: int = 1) -> list[str]:
    if count == 1 and start == 1 and prefix in "sxyu":
        return [prefix]
    return [f"{prefix}{i}" for i in range(start, start + count)]


def _core(kind: str, params: tuple[int, ...]) -> tuple[list[tuple[int, int]], list[str], str]:
    """Core edges, vertex names in index order, and the default leaf vertex."""
    if kind == THETA:
        if len(params) != 3:
            raise InfeasibleSpec("theta needs (p, q, l)")
        p, q, l = params
        lengths = (l, p - l, q - l)
        if min(lengths) < 1:
            raise InfeasibleSpec(f"theta({p},{q},{l}) needs 1 <= l < min(p, q)")
        if sorted(lengths)[:2] == [1, 1]:
            raise InfeasibleSpec(f"theta({p},{q},{l}) would need a double edge")
        names = ["u", "v"]
        edges = []
        for prefix, length in zip("sxy", lengths):
            interior = list(range(len(names), len(names) + length - 1))
            names.extend(_indexed(prefix, length - 1))
            chain = [0] + interior + [1]
            edges.extend(zip(chain, chain[1:]))
        return edges, names, "u"
    if kind == BOWTIE:
        if len(params) != 2:
            raise InfeasibleSpec("bowtie needs (p, q)")
        p, q = params
        if min(p, q) < 3:
            raise InfeasibleSpec("bowtie cycles need length >= 3")
        names = ["u"] + _indexed("v", p - 1) + _indexed("w", q - 1)
        vs = list(range(1, p))
        ws = list(range(p, p + q - 1))
        edges = []
        for cyc in (vs, ws):
            chain = [0] + cyc + [0]
            edges.extend(zip(chain, chain[1:]))
        return edges, names, "v1"
    if kind == DUMBBELL:
        if len(params) != 3:
            raise InfeasibleSpec("dumbbell needs (p, q, r)")
        p, q, r = params
        if min(p, q) < 3 or r < 1:
            raise InfeasibleSpec("dumbbell needs cycles of length >= 3 and r >= 1")
        names = _indexed("v", p) + _indexed("u", r - 1) + _indexed("w", q)
        vs = list(range(p))
        bridge = [p - 1] + list(range(p, p + r - 1)) + [p + r - 1]
        ws = list(range(p + r - 1, p + r - 1 + q))
        edges = list(zip(vs, vs[1:] + vs[:1]))
        edges += list(zip(bridge, bridge[1:]))
        edges += list(zip(ws, ws[1:] + ws[:1]))
        return edges, names, f"v{p}"
    raise InfeasibleSpec(f"unknown family {kind!r}")


def family_names(spec: FamilySpec) -> dict[str, int]:
    """Core vertex names of the built graph, mapped to their indices."""
    _, names, _ = _core(spec.kind, spec.params)
    return {name: i for i, name in enumerate(names)}


def _resolve(names: list[str], key: str | int) -> int:
    if isinstance(key, int) or (isinstance(key, str) and key.isdigit()):
        idx = int(key)
        if not 0 <= idx < len(names):
            raise InfeasibleSpec(f"core vertex index {idx} out of range")
        return idx
    if key in names:
        return names.index(key)
    raise InfeasibleSpec(f"unknown core vertex {key!r}; known: {', '.join(names)}")


def build(spec: FamilySpec) -> Graph:
    edges, names, default = _core(spec.kind, spec.params)
    size = len(names)
    if spec.attach is None:
        k = 0 if spec.n is None else spec.n - size
        counts = {names.index(default): k} if k else {}
    else:
        counts = {}
        for key, c in spec.attach.items():
            if c < 0:
                raise InfeasibleSpec("negative leaf count")
            idx = _resolve(names, key)
            counts[idx] = counts.get(idx, 0) + c
        k = sum(counts.values())
        if spec.n is not None and spec.n - size != k:
            raise InfeasibleSpec(
                f"n={spec.n} needs {spec.n - size} leaves on a core of {size} vertices, attach gives {k}")
    if k < 0:
        raise InfeasibleSpec(f"n={spec.n} is smaller than the core ({size} vertices)")
    nxt = size
    for v in sorted(counts):
        for _ in range(counts[v]):
            edges.append((v, nxt))
            nxt += 1
    return Graph(nxt, tuple(edges))


# --- free trees -----------------------------------------------------------
#
# A rooted tree is a level sequence (preorder depths, root at level 0) in
# canonical form: sibling subtrees appear in non-increasing lexicographic
# order.  A free tree is represented by the rooting at its centre; for
# bicentral trees the rooting whose first subtree is (by size, then by
# sequence) no larger than the rest of the tree.

def _rooted_successor(seq: list[int], p: int | None = None) -> list[int] | None:
    """Next canonical level sequence in decreasing lexicographic order.

    ``p`` forces the position to decrement; by default it is the last vertex
    not adjacent to the root.
    """
    if p is None:
        p = len(seq) - 1
        while p > 0 and seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = seq[:p]
    gap = p - q
    for i in range(p, len(seq)):
        out.append(out[i - gap])
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """First subtree of the root (re-rooted) and the root with the rest."""
    m = next((i for i in range(2, len(seq)) if seq[i] == 1), len(seq))
    return [x - 1 for x in seq[1:m]], [0] + seq[m:]


def _is_free_canonical(seq: list[int]) -> bool:
    if len(seq) <= 2:
        return True
    left, rest = _split(seq)
    hl, hr = max(left), max(rest)
    if hr != hl:
        return hr > hl
    return (len(left), left) <= (len(rest), rest)


def _jump(seq: list[int]) -> list[int] | None:
    """Skip every sequence that shares the current (too large) first subtree.

    Within that block the rest of the tree only shrinks lexicographically,
    so its height cannot grow and no member is canonical.  The new first
    subtree is followed by the tallest possible rest: a path as deep as it.
    """
    left, _ = _split(seq)
    p = len(left)
    out = _rooted_successor(seq, p)
    if out is None:
        return None
    if seq[p] > 2:
        new_left, _ = _split(out)
        height = max(new_left) + 1
        out[len(out) - height:] = range(1, height + 1)
    return out


def free_tree_sequences(n: int) -> Iterator[list[int]]:
    if not 1 <= n <= 16:
        raise OutOfRange(f"free_trees supports 1 <= n <= 16, got {n}")
    if n <= 2:
        yield list(range(n))
        return
    seq = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        yield seq
        seq = _rooted_successor(seq)
        while seq is not None and not _is_free_canonical(seq):
            seq = _jump(seq)


def level_sequence_graph(seq: list[int]) -> Graph:
    edges = []
    stack: list[int] = []
    for v, level in enumerate(seq):
        del stack[level:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Graph(len(seq), tuple(edges))


def free_trees(n: int) -> Iterator[Graph]:
    """Every unlabeled free tree on ``n`` vertices exactly once."""
    for seq in free_tree_sequences(n):
        yield level_sequence_graph(seq)


# --- connected (n, n+1)-graphs --------------------------------------------

def bicyclic_forms(n: int) -> list[CanonicalForm]:
    """Canonical forms of all connected (n, n+1)-graphs, sorted."""
    if not 5 <= n <= 12:
        raise OutOfRange(f"all_bicyclic supports 5 <= n <= 12, got {n}")
    seen: set[int] = set()
    for tree in free_trees(n):
        adj = tree.adjacency
        non_edges = [(u, v) for u, v in combinations(range(n), 2) if not adj[u] >> v & 1]
        for e, f in combinations(non_edges, 2):
            seen.add(canonical_form(tree.with_edges((e, f))).bits)
    return [CanonicalForm(n, bits) for bits in sorted(seen)]


def all_bicyclic(n: int) -> Iterator[Graph]:
    """Every isomorphism class of connected (n, n+1)-graphs exactly once, as
    canonically labeled graphs in canonical-form order."""
    for form in bicyclic_forms(n):
        yield form.graph()
