"""Exhaustive labeled-graph enumeration and vectorized coefficient tables.

A labeled graph of order n is encoded as a C(n,2)-bit mask over vertex
pairs, bit position pair_index(i, j) = C(j,2) + i for i < j (the same
column-major upper-triangle order as graph6).  All 2^C(n,2) graphs of one
order live in a single numpy array, and the interlace polynomial of every
one of them is computed by a bottom-up sweep of the pivot reduction

    q(G) = q(G - i) + q(G^{ij} - j)

grouped by the lowest set bit of the mask (a canonical first edge), so
each order is one vectorized pass over the previous order's table.  That
is what makes exhaustive identity checking over all 2,097,152 graphs of
order 7 a minutes-scale job instead of an hours-scale one.

The mask-level operations (vertex deletion, pivot, label swap) and the
per-graph structure tables (independence number, component count, edge
count, isolated vertices) are all vectorized over mask arrays as well.

Orders above 7 are rejected: the order-8 table alone would hold 2^28
rows.  Use the recursive engine for individual larger graphs.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import numpy as np

from .graphs import Graph, TooLargeError

TABLE_MAX_ORDER = 7


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(i: int, j: int) -> int:
    """Bit position of the vertex pair {i, j}, i < j, in the mask encoding."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pair_of_bit(b: int) -> tuple[int, int]:
    j = 1
    while j * (j + 1) // 2 <= b:
        j += 1
    return b - j * (j - 1) // 2, j


def mask_of_graph(g: Graph) -> int:
    mask = 0
    for i, j in g.edges():
        mask |= 1 << pair_index(i, j)
    return mask


def graph_of_mask(n: int, mask: int) -> Graph:
    edges = []
    m = mask
    while m:
        b = (m & -m).bit_length() - 1
        edges.append(pair_of_bit(b))
        m &= m - 1
    return Graph(n, edges)


def all_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Every labeled graph of order n exactly once, in mask order."""
    from .graphs import is_connected

    for mask in range(1 << pair_count(n)):
        g = graph_of_mask(n, mask)
        if connected_only and not is_connected(g):
            continue
        yield g


# -- vectorized mask operations --------------------------------------------


def delete_vertex_masks(masks: np.ndarray, v: int, n: int) -> np.ndarray:
    """Masks of G - v (order n-1, compacted labels) for an array of masks."""
    out = np.zeros_like(masks)
    for x, y in combinations(range(n), 2):
        if v in (x, y):
            continue
        src = pair_index(x, y)
        dst = pair_index(x - (x > v), y - (y > v))
        out |= (masks >> src & 1) << dst
    return out


def pivot_masks(masks: np.ndarray, a: int, b: int, n: int) -> np.ndarray:
    """Masks of the pivot G^{ab}; callers must ensure bit ab is set."""
    out = masks.copy()
    others = [x for x in range(n) if x not in (a, b)]
    for idx, x in enumerate(others):
        ax = masks >> pair_index(a, x) & 1
        bx = masks >> pair_index(b, x) & 1
        for y in others[idx + 1 :]:
            ay = masks >> pair_index(a, y) & 1
            by = masks >> pair_index(b, y) & 1
            toggle = (ax | bx) & (ay | by) & ((ax ^ ay) | (bx ^ by))
            out ^= toggle << pair_index(x, y)
    return out


def label_swap_masks(masks: np.ndarray, a: int, b: int, n: int) -> np.ndarray:
    """Masks of G with vertices a and b exchanged."""

    def swap(v):
        return b if v == a else a if v == b else v

    out = np.zeros_like(masks)
    for x, y in combinations(range(n), 2):
        out |= (masks >> pair_index(x, y) & 1) << pair_index(swap(x), swap(y))
    return out


# -- the coefficient table ---------------------------------------------------


class CoefficientTable:
    """Interlace polynomial coefficients of all labeled graphs of orders
    0..n_max; ``table(k)[mask, d]`` is the degree-d coefficient of q for
    the order-k graph encoded by mask."""

    def __init__(self, n_max: int):
        if n_max > TABLE_MAX_ORDER:
            raise TooLargeError(
                f"coefficient tables stop at order {TABLE_MAX_ORDER}"
            )
        self.n_max = n_max
        self._tables = [np.ones((1, 1), dtype=np.int64)]
        for k in range(1, n_max + 1):
            self._tables.append(self._build_level(k))

    def _build_level(self, k: int) -> np.ndarray:
        nb = pair_count(k)
        prev = self._tables[k - 1]
        table = np.zeros((1 << nb, k + 1), dtype=np.int64)
        table[0, k] = 1  # the edgeless graph
        for b in range(nb):
            i, j = pair_of_bit(b)
            # all masks whose lowest set bit is b
            masks = (
                np.arange(1 << (nb - b - 1), dtype=np.int64) << (b + 1)
            ) | (1 << b)
            del_i = delete_vertex_masks(masks, i, k)
            del_j = delete_vertex_masks(pivot_masks(masks, i, j, k), j, k)
            table[masks, :k] = prev[del_i] + prev[del_j]
        return table

    def table(self, n: int) -> np.ndarray:
        return self._tables[n]

    def coeffs(self, g: Graph) -> tuple[int, ...]:
        row = self._tables[g.n][mask_of_graph(g)]
        return tuple(int(c) for c in row)

    def evaluate(self, n: int, x0: int) -> np.ndarray:
        """q(G; x0) for every order-n graph, as a vector over masks."""
        powers = np.array([x0**d for d in range(n + 1)], dtype=np.int64)
        return self._tables[n] @ powers

    def degrees(self, n: int) -> np.ndarray:
        nz = self._tables[n] != 0
        assert nz.any(axis=1).all(), "q is never the zero polynomial"
        return n - np.argmax(nz[:, ::-1], axis=1)

    def lowest_degrees(self, n: int) -> np.ndarray:
        nz = self._tables[n] != 0
        return np.argmax(nz, axis=1)

    def nonzero_term_counts(self, n: int) -> np.ndarray:
        return (self._tables[n] != 0).sum(axis=1)


# -- vectorized structure tables ---------------------------------------------


def edge_count_table(n: int) -> np.ndarray:
    masks = np.arange(1 << pair_count(n), dtype=np.uint64)
    return np.bitwise_count(masks).astype(np.int64)


def incident_bits(n: int, v: int) -> int:
    mask = 0
    for u in range(n):
        if u != v:
            mask |= 1 << pair_index(u, v)
    return mask


def isolated_count_table(n: int) -> np.ndarray:
    masks = np.arange(1 << pair_count(n), dtype=np.int64)
    count = np.zeros(len(masks), dtype=np.int8)
    for v in range(n):
        count += (masks & incident_bits(n, v)) == 0
    return count


def independence_number_table(n: int) -> np.ndarray:
    """alpha(G) for every order-n graph: a subset is independent iff the
    mask avoids every pair bit inside it."""
    masks = np.arange(1 << pair_count(n), dtype=np.int64)
    alpha = np.zeros(len(masks), dtype=np.int8)
    for subset in range(1, 1 << n):
        verts = [v for v in range(n) if subset >> v & 1]
        within = 0
        for a, b in combinations(verts, 2):
            within |= 1 << pair_index(a, b)
        size = len(verts)
        np.maximum(alpha, np.int8(size) * ((masks & within) == 0), out=alpha)
    return alpha


def component_count_table(n: int) -> np.ndarray:
    """Number of connected components of every order-n graph, by
    vectorized minimum-label propagation (n relaxation rounds suffice)."""
    masks = np.arange(1 << pair_count(n), dtype=np.int64)
    labels = np.tile(np.arange(n, dtype=np.int8), (len(masks), 1))
    pairs = list(combinations(range(n), 2))
    for _ in range(n):
        for x, y in pairs:
            has = (masks >> pair_index(x, y) & 1).astype(bool)
            mn = np.minimum(labels[:, x], labels[:, y])
            labels[:, x] = np.where(has, mn, labels[:, x])
            labels[:, y] = np.where(has, mn, labels[:, y])
    count = np.zeros(len(masks), dtype=np.int8)
    for v in range(n):
        count += labels[:, v] == v
    return count


# -- unlabeled free trees ----------------------------------------------------


def _rooted_canonical(adj: list[set[int]], root: int, parent: int) -> tuple:
    children = sorted(
        _rooted_canonical(adj, u, root) for u in adj[root] if u != parent
    )
    return tuple(children)


def _tree_centers(adj: list[set[int]]) -> list[int]:
    n = len(adj)
    if n == 1:
        return [0]
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] == 1]
    removed = 0
    while n - removed > 2:
        removed += len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
            degree[v] = 0
        layer = nxt
    return layer


def _canonical_form(g: Graph) -> tuple:
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    return min(_rooted_canonical(adj, c, -1) for c in _tree_centers(adj))


def _graph_from_form(form: tuple) -> Graph:
    edges = []

    def build(f, parent):
        me = build.counter
        build.counter += 1
        if parent >= 0:
            edges.append((parent, me))
        for child in f:
            build(child, me)
        return me

    build.counter = 0
    build(form, -1)
    return Graph(build.counter, edges)


def free_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on n vertices.

    Grown by leaf attachment with canonical-form deduplication; fine for
    the n <= 10 this library sweeps (there are 106 trees at n = 10).
    """
    if n < 1:
        return []
    forms = {(): None}
    for _ in range(n - 1):
        nxt = {}
        for form in forms:
            g = _graph_from_form(form)
            for v in range(g.n):
                bigger = Graph(g.n + 1, list(g.edges()) + [(v, g.n)])
                nxt[_canonical_form(bigger)] = None
        forms = nxt
    return [_graph_from_form(f) for f in forms]
