"""The one-variable interlace polynomial q(G).

q is the unique graph polynomial with q(E_n) = x^n on edgeless graphs and

    q(G) = q(G - a) + q(G^{ab} - b)        for any edge ab,

where G^{ab} is the pivot.  The value is independent of the pivot edges
chosen; the verification suites re-check that exhaustively on small
orders.  Coefficients are nonnegative integers, q(G;2) = 2^n, the lowest
nonzero degree equals the number of components, and q is multiplicative
over disjoint unions.

The recursion here is exponential but heavily pruned:

* isolated vertices are stripped up front (each contributes a factor x);
* components are computed independently and their polynomials multiplied;
* results are memoized on the exact labeled adjacency encoding, which is
  shared aggressively because pivot/delete branches revisit the same
  labeled subgraphs.

The pivot edge is chosen deterministically: first endpoint of minimum
degree (ties by index), second its lowest-indexed neighbor.  Deleting a
low-degree vertex tends to disconnect and shrink subproblems.

A memo cache is a plain dict mapping adjacency-row tuples to coefficient
tuples.  Pass one in to share work across calls; each worker should own
its cache (idempotent inserts make sharing safe, but there is no need).

Paths are indexed by edge count: path_polynomial(n) is the path with n
edges and n + 1 vertices.
"""

from __future__ import annotations

from typing import MutableMapping, Sequence

from .graphs import (
    Graph,
    TooLargeError,
    complete_graph,
    edgeless_graph,
)
from .polynomials import IntPolynomial

MemoCache = MutableMapping[tuple[int, ...], tuple[int, ...]]


# -- coefficient-tuple helpers (hot path works on bare tuples) ------------


def _add(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    if len(p) < len(q):
        p, q = q, p
    return tuple(a + b for a, b in zip(p, q)) + p[len(q) :]


def _mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def _delete(rows: tuple[int, ...], v: int) -> tuple[int, ...]:
    low = (1 << v) - 1
    return tuple(
        (r & low) | (r >> (v + 1) << v) for u, r in enumerate(rows) if u != v
    )


def _pivot(rows: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    ra, rb = rows[a], rows[b]
    c1 = ra & ~rb & ~(1 << b)
    c2 = rb & ~ra & ~(1 << a)
    c3 = ra & rb
    t1, t2, t3 = c2 | c3, c1 | c3, c1 | c2
    out = list(rows)
    for v in range(len(rows)):
        bit = 1 << v
        if c1 & bit:
            out[v] ^= t1
        elif c2 & bit:
            out[v] ^= t2
        elif c3 & bit:
            out[v] ^= t3
    return tuple(out)


def _extract(rows: tuple[int, ...], mask: int) -> tuple[int, ...]:
    """Induced sub-rows on the vertices of ``mask``, compacted in order."""
    verts = []
    m = mask
    while m:
        verts.append((m & -m).bit_length() - 1)
        m &= m - 1
    out = []
    for v in verts:
        r, nr = rows[v], 0
        for i, u in enumerate(verts):
            if r >> u & 1:
                nr |= 1 << i
        out.append(nr)
    return tuple(out)


def _q_connected(rows: tuple[int, ...], memo: MemoCache) -> tuple[int, ...]:
    """q of a connected graph with no isolated vertices, given as rows."""
    got = memo.get(rows)
    if got is not None:
        return got
    n = len(rows)
    # pivot edge: a of minimum degree, b its lowest neighbor
    a, da = 0, 65
    for v, r in enumerate(rows):
        d = bin(r).count("1")
        if d < da:
            a, da = v, d
    b = (rows[a] & -rows[a]).bit_length() - 1
    left = _q_rows(_delete(rows, a), memo)
    right = _q_rows(_delete(_pivot(rows, a, b), b), memo)
    res = _add(left, right)
    memo[rows] = res
    return res


def _q_rows(rows: tuple[int, ...], memo: MemoCache) -> tuple[int, ...]:
    n = len(rows)
    if n == 0:
        return (1,)
    # strip isolated vertices: each contributes a factor x
    isolated = sum(1 for r in rows if r == 0)
    if isolated:
        if isolated == n:
            return (0,) * n + (1,)
        keep = 0
        for v, r in enumerate(rows):
            if r:
                keep |= 1 << v
        rows = _extract(rows, keep)
        return (0,) * isolated + _q_rows(rows, memo)
    # split into components
    comp = rows[0] | 1
    frontier = comp
    while frontier:
        nxt = 0
        m = frontier
        while m:
            u = (m & -m).bit_length() - 1
            nxt |= rows[u]
            m &= m - 1
        frontier = nxt & ~comp
        comp |= frontier
    if comp == (1 << n) - 1:
        return _q_connected(rows, memo)
    res = _q_connected(_extract(rows, comp), memo)
    rest = _q_rows(_extract(rows, ((1 << n) - 1) & ~comp), memo)
    return _mul(res, rest)


def interlace_polynomial(g: Graph, cache: MemoCache | None = None) -> IntPolynomial:
    """Compute q(G) exactly by memoized pivot reduction.

    Practical up to order ~25 for dense graphs; far beyond for forests
    and sparse graphs.  Pass a dict as ``cache`` to reuse work across
    calls.
    """
    if cache is None:
        cache = {}
    return IntPolynomial(_q_rows(g.rows, cache))


def interlace_at(g: Graph, x0: int, cache: MemoCache | None = None) -> int:
    """q(G; x0) as an exact integer; q(G;1) counts Euler circuits when G
    is the interlace graph of a 2-in/2-out digraph."""
    return interlace_polynomial(g, cache).evaluate(x0)


# -- closed forms ----------------------------------------------------------


def edgeless_polynomial(n: int) -> IntPolynomial:
    """q(E_n) = x^n, n >= 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return IntPolynomial.monomial(n)


def complete_polynomial(n: int) -> IntPolynomial:
    """q(K_n) = 2^(n-1) x, n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return IntPolynomial((0, 2 ** (n - 1)))


def star_polynomial(n: int) -> IntPolynomial:
    """q(K_{1,n}) = 2x + x^2 + ... + x^n, n >= 2."""
    if n < 2:
        raise ValueError("n must be >= 2 (use complete_polynomial(2) for K_2)")
    return IntPolynomial((0, 2) + (1,) * (n - 1))


def complete_bipartite_polynomial(m: int, n: int) -> IntPolynomial:
    """q(K_{m,n}) = (1+...+x^(m-1))(1+...+x^(n-1)) + x^m + x^n - 1, m,n >= 1."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    ones_m = IntPolynomial((1,) * m)
    ones_n = IntPolynomial((1,) * n)
    return (
        ones_m * ones_n
        + IntPolynomial.monomial(m)
        + IntPolynomial.monomial(n)
        - IntPolynomial.one()
    )


def path_polynomial(n: int) -> IntPolynomial:
    """q of the path with n edges (n + 1 vertices), n >= 0.

    Satisfies q(P_n) = q(P_{n-1}) + x q(P_{n-2}) with q(P_0) = x and
    q(P_1) = 2x; evaluating at 1 yields the Fibonacci number F_{n+2}.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    prev, cur = (0, 1), (0, 2)  # q(P_0), q(P_1)
    if n == 0:
        return IntPolynomial(prev)
    for _ in range(n - 1):
        prev, cur = cur, _add(cur, (0,) + prev)
    return IntPolynomial(cur)


def cycle_polynomial(n: int) -> IntPolynomial:
    """q(C_n) for n >= 3, by integer power sums.

    With a + b = 1 and ab = -x, the power sums p_k = a^k + b^k obey
    p_k = p_{k-1} + x p_{k-2}, p_0 = 2, p_1 = 1, and

        q(C_n) = p_n + (x^2 - 2x - 1)   for n even,
        q(C_n) = p_n + (x - 1)          for n odd.

    No symbolic square roots are needed; everything stays in Z[x].
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    prev, cur = (2,), (1,)  # p_0, p_1
    for _ in range(n - 1):
        prev, cur = cur, _add(cur, (0,) + prev)
    corr = (-1, -2, 1) if n % 2 == 0 else (-1, 1)
    return IntPolynomial(_add(cur, corr))


def complete_multipartite_polynomial(parts: Sequence[int]) -> IntPolynomial:
    """q of the complete multipartite graph with the given part sizes.

    For parts k_1..k_r (each >= 1),

        q = (x/2) prod_i (2 + x + ... + x^(k_i-1))
            + (-1)^r (1 - x/2) prod_i (x + ... + x^(k_i-1)).

    The halves always cancel to integers; that evenness is asserted.
    """
    if not parts or any(k < 1 for k in parts):
        raise ValueError("need r >= 1 parts, each >= 1")
    r = len(parts)
    prod_a = IntPolynomial.one()
    prod_b = IntPolynomial.one()
    for k in parts:
        prod_a = prod_a * IntPolynomial((2,) + (1,) * (k - 1))
        prod_b = prod_b * IntPolynomial((0,) + (1,) * (k - 1))
    sign = 1 if r % 2 == 0 else -1
    # 2 q = x * prod_a + sign * (2 - x) * prod_b
    twice = IntPolynomial((0, 1)) * prod_a + IntPolynomial((2, -1)).scale(sign) * prod_b
    assert all(c % 2 == 0 for c in twice.coeffs), "numerator must be even"
    return IntPolynomial(c // 2 for c in twice.coeffs)


# -- substitution, duplication, multiplication, rotation -------------------


def substitute(template: Graph, parts: Sequence[Graph]) -> Graph:
    """G[G_1,...,G_n]: replace vertex i of the template by the graph
    parts[i], joining all of parts[i] to all of parts[j] whenever ij is a
    template edge.  Empty parts (order 0) are permitted.
    """
    if len(parts) != template.n:
        raise ValueError("need exactly one replacement graph per template vertex")
    offs = [0]
    for p in parts:
        offs.append(offs[-1] + p.n)
    edges = []
    for i, p in enumerate(parts):
        edges.extend((offs[i] + u, offs[i] + v) for u, v in p.edges())
    for i, j in template.edges():
        edges.extend(
            (u, v)
            for u in range(offs[i], offs[i] + parts[i].n)
            for v in range(offs[j], offs[j] + parts[j].n)
        )
    return Graph(offs[-1], edges)


def solid_graph(template: Graph, sizes: Sequence[int]) -> Graph:
    """Substitute complete graphs of the given sizes for the vertices."""
    return substitute(template, [complete_graph(k) if k else Graph(0) for k in sizes])


def thick_graph(template: Graph, sizes: Sequence[int]) -> Graph:
    """Substitute edgeless graphs of the given sizes for the vertices."""
    return substitute(template, [edgeless_graph(k) for k in sizes])


def clique_substitution_polynomial(
    template_q: IntPolynomial, size_delta: int
) -> IntPolynomial:
    """q of a solid graph from its template's q: substituting cliques for
    vertices scales q by 2^(added vertex count)."""
    if size_delta < 0:
        raise ValueError("size_delta must be >= 0")
    return template_q.scale(2**size_delta)


def vertex_duplication_polynomial(
    q_g: IntPolynomial, q_g_minus_a: IntPolynomial
) -> IntPolynomial:
    """q(G with vertex a duplicated) = (1+x) q(G) - x q(G-a)."""
    return IntPolynomial((1, 1)) * q_g - q_g_minus_a.mul_x()


VERTEX_MULTIPLICATION_MAX_ORDER = 14


def vertex_multiplication_polynomial(
    g: Graph,
    multiplicities: Sequence[int],
    cache: MemoCache | None = None,
) -> IntPolynomial:
    """q of G with vertex i replaced by k_i independent copies.

    Expands over the 2^n induced subgraphs of G:

        q(G[k_1..k_n]) = sum over L in {0,1}^n of
            (-1)^(n + |L|) q(G[L]) prod_i S_i(L_i)

    where S_i(1) = 1 + x + ... + x^(k_i - 1) and S_i(0) = x + ... +
    x^(k_i - 1), and G[L] is the induced subgraph on {i : L_i = 1}.
    """
    if len(multiplicities) != g.n:
        raise ValueError("need one multiplicity per vertex")
    if any(k < 1 for k in multiplicities):
        raise ValueError("multiplicities must be >= 1")
    if g.n > VERTEX_MULTIPLICATION_MAX_ORDER:
        raise TooLargeError(
            f"order {g.n} exceeds {VERTEX_MULTIPLICATION_MAX_ORDER} "
            "(2^n induced-subgraph expansion)"
        )
    if cache is None:
        cache = {}
    n = g.n
    total = IntPolynomial.zero()
    for subset in range(1 << n):
        sub_rows = _extract(g.rows, subset)
        term = IntPolynomial(_q_rows(sub_rows, cache))
        for i in range(n):
            k = multiplicities[i]
            if subset >> i & 1:
                factor = IntPolynomial((1,) * k)
            else:
                factor = IntPolynomial((0,) + (1,) * (k - 1))
            term = term * factor
            if term.is_zero():
                break
        popcnt = bin(subset).count("1")
        if (n + popcnt) % 2:
            term = -term
        total = total + term
    return total


def rotate(g: Graph, u: int, v: int) -> Graph:
    """Build the partner H of the rotation pair (G, H).

    H is G with the uv relation toggled, plus a fresh degree-1 vertex w
    adjacent only to u.  For every x >= 1, q(G; x) <= q(H; x).
    """
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"invalid vertex pair ({u},{v})")
    edges = set(frozenset(e) for e in g.edges())
    edges ^= {frozenset((u, v))}
    w = g.n
    return Graph(g.n + 1, [tuple(e) for e in edges] + [(u, w)])
