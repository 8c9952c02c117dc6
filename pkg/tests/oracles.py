"""Independent reference implementations used only by the tests.

None of these share code paths with the package beyond the Graph container.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product
from math import comb, factorial

import numpy as np

from avmlab.graph import Graph


# --- trees ----------------------------------------------------------------

def prufer_trees(n: int):
    """Every labeled tree on n >= 2 vertices, by Pruefer decoding."""
    if n == 2:
        yield [(0, 1)]
        return
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(v for v in range(n) if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = [v for v in range(n) if degree[v] == 1]
        edges.append((u, v))
        yield edges


def _adj(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _ahu(adj, root, parent=-1) -> str:
    return "(" + "".join(sorted(_ahu(adj, w, root) for w in adj[root] if w != parent)) + ")"


def tree_centers(adj) -> list[int]:
    n = len(adj)
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def tree_code(n: int, edges) -> str:
    """Isomorphism invariant of a free tree: min AHU string over its centres."""
    if n == 1:
        return "()"
    adj = _adj(n, edges)
    return min(_ahu(adj, c) for c in tree_centers(adj))


def free_tree_codes_prufer(n: int) -> set[str]:
    if n == 1:
        return {"()"}
    return {tree_code(n, e) for e in prufer_trees(n)}


def free_tree_codes_extension(n: int) -> set[str]:
    """Grow unlabeled trees one leaf at a time, deduplicating by AHU code."""
    level = {"()": (1, [])}
    for size in range(2, n + 1):
        nxt = {}
        for m, edges in level.values():
            for v in range(m):
                e2 = edges + [(v, m)]
                code = tree_code(size, e2)
                if code not in nxt:
                    nxt[code] = (size, e2)
        level = nxt
    return set(level)


# --- canonical minimum by brute force ---------------------------------------

def _pair_index(n):
    idx = {}
    k = 0
    for v in range(1, n):
        for u in range(v):
            idx[(u, v)] = idx[(v, u)] = k
            k += 1
    return idx, k


def min_codes(n: int, codes: np.ndarray) -> np.ndarray:
    """Minimum over all n! relabelings of each upper-triangle code.

    Codes use the package's bit order (x(0,1) most significant, column
    order), but the permutation is applied by table lookups, not by the
    package's search.
    """
    idx, total = _pair_index(n)
    codes = codes.astype(np.int64)
    best = np.full(codes.shape, np.iinfo(np.int64).max, dtype=np.int64)
    # bit b (from the most significant end) sits at pair pairs[b]
    pairs = [None] * total
    for (u, v), k in idx.items():
        if u < v:
            pairs[k] = (u, v)
    chunks = [range(s, min(s + 8, total)) for s in range(0, total, 8)]
    for perm in permutations(range(n)):
        target = [total - 1 - idx[(perm[u], perm[v])] for u, v in pairs]
        out = np.zeros_like(codes)
        for ch in chunks:
            local = np.arange(1 << len(ch), dtype=np.int64)
            table = np.zeros_like(local)
            for j, b in enumerate(ch):
                table |= ((local >> (len(ch) - 1 - j)) & 1) << target[b]
            shift = total - 1 - ch[-1]
            out |= table[(codes >> shift) & ((1 << len(ch)) - 1)]
        np.minimum(best, out, out=best)
    return best


def graph_code(g: Graph) -> int:
    idx, total = _pair_index(g.n)
    code = 0
    for u, v in g.edges:
        code |= 1 << (total - 1 - idx[(u, v)])
    return code


def code_graph(n: int, code: int) -> Graph:
    idx, total = _pair_index(n)
    edges = [(u, v) for (u, v), k in idx.items() if u < v and code >> (total - 1 - k) & 1]
    return Graph(n, tuple(edges))


# --- bicyclic graphs ----------------------------------------------------

def connected(n: int, edges) -> bool:
    adj = _adj(n, edges)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def labeled_connected_counts(n_max: int, k_max: int) -> dict[tuple[int, int], int]:
    """c(n, k): labeled connected graphs with n vertices and k edges.

    Standard rooted-component recurrence over the component containing
    vertex 1, from the total counts comb(comb(n, 2), k).
    """
    g = {(n, k): comb(comb(n, 2), k) for n in range(n_max + 1) for k in range(k_max + 1)}
    c: dict[tuple[int, int], int] = {}
    for n in range(1, n_max + 1):
        for k in range(k_max + 1):
            total = g[(n, k)]
            for j in range(1, n):
                for i in range(k + 1):
                    if (j, i) in c:
                        total -= comb(n - 1, j - 1) * c[(j, i)] * g[(n - j, k - i)]
            c[(n, k)] = total
    return c


def automorphism_count(g: Graph) -> int:
    n = g.n
    a = np.zeros((n, n), dtype=bool)
    for u, v in g.edges:
        a[u, v] = a[v, u] = True
    perms = np.array(list(permutations(range(n))), dtype=np.int8)
    mapped = a[perms[:, :, None], perms[:, None, :]]
    return int(np.all(mapped == a, axis=(1, 2)).sum())


def labeled_bicyclic_filter(n: int) -> set[int]:
    """Brute-force minimum codes of every connected (n, n+1) labeled graph."""
    pairs = list(combinations(range(n), 2))
    codes = []
    for chosen in combinations(pairs, n + 1):
        if connected(n, chosen):
            codes.append(graph_code(Graph(n, chosen)))
    return set(min_codes(n, np.array(codes, dtype=np.int64)).tolist())


# --- random graphs --------------------------------------------------------

def random_connected(rng: random.Random, n: int, m: int) -> Graph:
    """Random spanning tree plus random extra edges, randomly relabeled."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    rest = [e for e in combinations(range(n), 2) if e not in edges]
    edges.update(rng.sample(rest, min(len(rest), m - (n - 1))))
    return Graph(n, tuple(edges))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(n, tuple(e for e in combinations(range(n), 2) if rng.random() < p))


def brute_matchings(g: Graph) -> list[frozenset]:
    """Every maximal matching by subset enumeration, in pure Python."""
    out = []
    edges = g.edges
    for r in range(len(edges) + 1):
        for sub in combinations(edges, r):
            verts = [x for e in sub for x in e]
            if len(set(verts)) != len(verts):
                continue
            cov = set(verts)
            if all(u in cov or v in cov for u, v in edges):
                out.append(frozenset(sub))
    return out


def n_factorial_over_aut(g: Graph) -> int:
    return factorial(g.n) // automorphism_count(g)
