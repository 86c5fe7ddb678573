"""Double occurrence words, balanced digraphs, and circuit counting.

A double occurrence word is a cyclic sequence in which each of n symbols
appears exactly twice: the visit order of an Euler circuit of a 2-in/2-out
digraph.  Words are stored canonically, as the lexicographically smallest
linear rotation that begins at an occurrence of the smallest symbol, so
word equality is cyclic equality.  Reflections are *not* identified
(circuits are directed).

Two symbols are interlaced when their occurrences cross (the cyclic
order reads a..b..a..b); the interlace graph has an edge for every
interlaced pair.  Transposing a word on an interlaced pair exchanges one
of the two a-to-b stretches with the other; which pair of occurrences
delimits the stretches does not matter, both choices produce the same
cyclic word (checked by brute force in the tests).

A BalancedDigraph is a multi-digraph with distinguishable arcs and
distinguishable loops in which every vertex has in-degree equal to
out-degree, plus a count of free loops (closed curves through no vertex).
Such digraphs are exactly the edge-disjoint unions of oriented circuits
and free loops.  A transition system matches, at every vertex, each
incoming arc end to an outgoing arc end; following the matchings
partitions the arcs into circuits.  The circuit partition polynomial

    r(D; x) = sum_k (number of transition systems with k circuits) x^k

(with a factor x per free loop) and the Martin polynomial
m(D; x) = r(D; x-1)/(x-1) tie this module to the interlace polynomial:
for a word w with interlace graph H and digraph D,

    x q(H; 1+x) = r(D; x),    q(H; x) = m(D; x),

and in particular q(H; 1) is the number of Euler circuits of D.

One caution on words versus circuits: an Euler circuit is a cyclic
sequence of *arcs*, and distinct circuits can visit vertices in the same
order when the digraph has parallel arcs (smallest case: the word
"1 2 1 2", whose digraph has two Euler circuits but only one vertex-visit
word).  Counting operations here therefore count circuits, not words.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterable, Iterator, Sequence

from .graphs import Graph, TooLargeError
from .polynomials import IntPolynomial

FORWARD, BACKWARD = 0, 1


class NotInterlacedError(ValueError):
    """A transposition was requested on a pair that is not interlaced."""


class DisconnectedError(ValueError):
    """An Euler-circuit operation was applied to a disconnected digraph."""


class DoubleOccurrenceWord:
    """A cyclic word over symbols 0..n-1, each appearing exactly twice.

    ``symbols`` holds the canonical linear rotation; ``labels``, when
    present, map symbol ids back to the tokens they were parsed from.
    """

    __slots__ = ("symbols", "labels")

    def __init__(
        self, symbols: Iterable[int], labels: Sequence[str] | None = None
    ):
        syms = tuple(symbols)
        n2 = len(syms)
        if n2 % 2:
            raise ValueError("word length must be even")
        n = n2 // 2
        counts = [0] * n
        for s in syms:
            if not isinstance(s, int) or not 0 <= s < n:
                raise ValueError(f"symbols must be dense ints 0..{n - 1}, got {s!r}")
            counts[s] += 1
        if any(c != 2 for c in counts):
            raise ValueError("every symbol must appear exactly twice")
        object.__setattr__(self, "symbols", _canonical_rotation(syms))
        object.__setattr__(
            self, "labels", tuple(labels) if labels is not None else None
        )

    def __setattr__(self, name, value):
        raise AttributeError("DoubleOccurrenceWord is immutable")

    @classmethod
    def parse(cls, text: str) -> "DoubleOccurrenceWord":
        """Parse whitespace-separated tokens; tokens become dense symbol
        ids in order of first appearance."""
        tokens = text.split()
        ids: dict[str, int] = {}
        syms = []
        for t in tokens:
            if t not in ids:
                ids[t] = len(ids)
            syms.append(ids[t])
        return cls(syms, labels=tuple(ids))

    @property
    def n(self) -> int:
        """Number of distinct symbols."""
        return len(self.symbols) // 2

    def occurrences(self, s: int) -> tuple[int, int]:
        first = self.symbols.index(s)
        return first, self.symbols.index(s, first + 1)

    def token(self, s: int) -> str:
        return self.labels[s] if self.labels is not None else str(s)

    def __str__(self) -> str:
        return " ".join(self.token(s) for s in self.symbols)

    def __repr__(self) -> str:
        return f"DoubleOccurrenceWord({list(self.symbols)!r})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DoubleOccurrenceWord) and self.symbols == other.symbols
        )

    def __hash__(self) -> int:
        return hash(self.symbols)


def _canonical_rotation(syms: tuple[int, ...]) -> tuple[int, ...]:
    if not syms:
        return syms
    m = min(syms)
    best = None
    for i, s in enumerate(syms):
        if s == m:
            rot = syms[i:] + syms[:i]
            if best is None or rot < best:
                best = rot
    return best


def interlaced(w: DoubleOccurrenceWord, a: int, b: int) -> bool:
    """True when the occurrences of a and b cross in the cyclic order."""
    p1, p2 = w.occurrences(a)
    q1, q2 = w.occurrences(b)
    return (p1 < q1 < p2) != (p1 < q2 < p2)


def interlace_graph(w: DoubleOccurrenceWord) -> Graph:
    """The interlace graph H(w): symbols as vertices, edges between
    interlaced pairs.  This is the circle graph of the chord diagram."""
    n = w.n
    pos = [[0, 0] for _ in range(n)]
    seen = [False] * n
    for i, s in enumerate(w.symbols):
        pos[s][1 if seen[s] else 0] = i
        seen[s] = True
    edges = []
    for a in range(n):
        p1, p2 = pos[a]
        for b in range(a + 1, n):
            q1, q2 = pos[b]
            if (p1 < q1 < p2) != (p1 < q2 < p2):
                edges.append((a, b))
    labels = w.labels if w.labels is not None else None
    return Graph(n, edges, labels)


def transpose(w: DoubleOccurrenceWord, a: int, b: int) -> DoubleOccurrenceWord:
    """Transpose the word on an interlaced pair: exchange one a-to-b
    stretch with the other.  An involution on cyclic words."""
    if not interlaced(w, a, b):
        raise NotInterlacedError(f"symbols {a} and {b} are not interlaced")
    p1, p2 = w.occurrences(a)
    q1, q2 = w.occurrences(b)
    if not p1 < q1 < p2 < q2:
        # the pattern must be b..a..b..a; swap roles so it reads a..b..a..b
        p1, p2, q1, q2 = q1, q2, p1, p2
    s = w.symbols
    out = s[: p1 + 1] + s[p2 + 1 : q2] + s[q1 : p2 + 1] + s[p1 + 1 : q1] + s[q2:]
    return DoubleOccurrenceWord(out, w.labels)


TRANSPOSITION_ORBIT_MAX_SYMBOLS = 7


def transposition_orbit(
    w: DoubleOccurrenceWord, max_symbols: int = TRANSPOSITION_ORBIT_MAX_SYMBOLS
) -> set[DoubleOccurrenceWord]:
    """Closure of {w} under transpositions on all interlaced pairs.

    This is the set of vertex-visit words of all Euler circuits of the
    word's digraph.  Its size can be *smaller* than the Euler circuit
    count when the digraph has parallel arcs; use
    circuit_transposition_orbit for the circuit-level orbit.
    """
    if w.n > max_symbols:
        raise TooLargeError(f"{w.n} symbols exceeds cutoff {max_symbols}")
    seen = {w}
    stack = [w]
    while stack:
        cur = stack.pop()
        for a in range(cur.n):
            for b in range(a + 1, cur.n):
                if interlaced(cur, a, b):
                    nxt = transpose(cur, a, b)
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
    return seen


PIVOT_ORBIT_MAX_SIZE = 1 << 20


def pivot_orbit(g: Graph, max_size: int = PIVOT_ORBIT_MAX_SIZE) -> set[Graph]:
    """Closure of {g} under pivots on all edges (labeled graphs).

    For the interlace graph H of an Euler circuit of a digraph D, this
    orbit matches the interlace graphs of all circuits of D up to
    isomorphism, but not as labeled graphs: transposing a circuit on ab
    mirrors as pivot *followed by swapping a and b*, so the exact labeled
    set is circuit_interlace_graphs (a pendant edge, for instance,
    freezes the pure pivot but not the swapped operation).
    """
    from .graphs import pivot

    seen = {g}
    stack = [g]
    while stack:
        cur = stack.pop()
        for a, b in cur.edges():
            nxt = pivot(cur, a, b)
            if nxt not in seen:
                if len(seen) >= max_size:
                    raise TooLargeError(f"pivot orbit exceeds {max_size}")
                seen.add(nxt)
                stack.append(nxt)
    return seen


def circuit_interlace_graphs(
    w: DoubleOccurrenceWord, max_size: int = PIVOT_ORBIT_MAX_SIZE
) -> set[Graph]:
    """Labeled interlace graphs of all Euler circuits of the word's digraph.

    Computed without enumerating circuits: transposing on ab turns H into
    the pivot H^{ab} with a and b swapped, so the set is the closure of
    {H(w)} under that combined operation.
    """
    from .graphs import label_swap, pivot

    g = interlace_graph(w)
    seen = {g}
    stack = [g]
    while stack:
        cur = stack.pop()
        for a, b in cur.edges():
            nxt = label_swap(pivot(cur, a, b), a, b)
            if nxt not in seen:
                if len(seen) >= max_size:
                    raise TooLargeError(f"closure exceeds {max_size}")
                seen.add(nxt)
                stack.append(nxt)
    return seen


# -- balanced digraphs ------------------------------------------------------


class BalancedDigraph:
    """Multi-digraph with distinguishable arcs; in-degree = out-degree
    everywhere; ``free_loops`` counts vertexless loops.

    Arcs are (tail, head) pairs identified by position; parallel arcs and
    loops are allowed and distinct.  Equality compares the arc multiset,
    the order and the free-loop count.
    """

    __slots__ = ("order", "arcs", "free_loops")

    def __init__(
        self,
        order: int,
        arcs: Iterable[tuple[int, int]],
        free_loops: int = 0,
    ):
        arcs = tuple((int(t), int(h)) for t, h in arcs)
        if free_loops < 0:
            raise ValueError("free_loops must be >= 0")
        indeg = [0] * order
        outdeg = [0] * order
        for t, h in arcs:
            if not (0 <= t < order and 0 <= h < order):
                raise ValueError(f"arc ({t},{h}) out of range for order {order}")
            outdeg[t] += 1
            indeg[h] += 1
        for v in range(order):
            if indeg[v] != outdeg[v]:
                raise ValueError(
                    f"vertex {v} has in-degree {indeg[v]} != out-degree {outdeg[v]}"
                )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "free_loops", free_loops)

    def __setattr__(self, name, value):
        raise AttributeError("BalancedDigraph is immutable")

    @property
    def is_two_in_two_out(self) -> bool:
        deg = [0] * self.order
        for t, _ in self.arcs:
            deg[t] += 1
        return all(d == 2 for d in deg)

    def in_arcs(self, v: int) -> list[int]:
        return [i for i, (_, h) in enumerate(self.arcs) if h == v]

    def out_arcs(self, v: int) -> list[int]:
        return [i for i, (t, _) in enumerate(self.arcs) if t == v]

    def is_connected(self) -> bool:
        """Weak connectivity over all ``order`` vertices (no free loops)."""
        if self.free_loops:
            return False
        if self.order == 0:
            return True
        adj = [set() for _ in range(self.order)]
        for t, h in self.arcs:
            adj[t].add(h)
            adj[h].add(t)
        seen = {0}
        stack = [0]
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.order

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BalancedDigraph)
            and self.order == other.order
            and self.free_loops == other.free_loops
            and sorted(self.arcs) == sorted(other.arcs)
        )

    def __hash__(self) -> int:
        return hash((self.order, self.free_loops, tuple(sorted(self.arcs))))

    def __repr__(self) -> str:
        fl = f", free_loops={self.free_loops}" if self.free_loops else ""
        return f"BalancedDigraph(order={self.order}, arcs={list(self.arcs)}{fl})"


def loops_digraph(m: int) -> BalancedDigraph:
    """m distinguishable loops on a single vertex."""
    return BalancedDigraph(1, [(0, 0)] * m)


def digraph_from_word(w: DoubleOccurrenceWord) -> BalancedDigraph:
    """The 2-in/2-out digraph visited by the word: arcs join consecutive
    symbols cyclically; arc i runs from position i to position i+1."""
    s = w.symbols
    arcs = [(s[i], s[(i + 1) % len(s)]) for i in range(len(s))]
    return BalancedDigraph(w.n, arcs)


# -- transition systems and circuit partitions ------------------------------

TransitionSystem = tuple[tuple[int, ...], ...]
"""Per-vertex matching of in-arc ends to out-arc ends.

Entry v is a permutation p of range(deg(v)): the i-th in-arc of vertex v
(in arc-id order) is followed by the p[i]-th out-arc.  For a loop, the
arc appears in both lists; a matching may send it to itself.
"""


@dataclass(frozen=True)
class CircuitPartition:
    """A partition of the arcs into circuits, plus free loops.

    Each circuit is a tuple of arc ids in traversal order, rotated to
    start at its smallest arc id; circuits are sorted by that id.
    """

    circuits: tuple[tuple[int, ...], ...]
    free_loops: int = 0

    @property
    def circuit_count(self) -> int:
        return len(self.circuits) + self.free_loops


def transition_systems(d: BalancedDigraph) -> Iterator[TransitionSystem]:
    """All transition systems, as tuples of per-vertex permutations."""
    degs = [len(d.in_arcs(v)) for v in range(d.order)]
    yield from product(*(tuple(permutations(range(k))) for k in degs))


def transition_system_count(d: BalancedDigraph) -> int:
    count = 1
    for v in range(d.order):
        count *= factorial(len(d.in_arcs(v)))
    return count


def circuit_partition_of(
    d: BalancedDigraph, ts: TransitionSystem
) -> CircuitPartition:
    """Partition of the arcs induced by following the transition system."""
    in_lists = [d.in_arcs(v) for v in range(d.order)]
    out_lists = [d.out_arcs(v) for v in range(d.order)]
    # next arc after e: at v = head(e), look up e's slot among v's in-arcs
    nxt = [0] * len(d.arcs)
    for v in range(d.order):
        perm = ts[v]
        for i, e in enumerate(in_lists[v]):
            nxt[e] = out_lists[v][perm[i]]
    unseen = set(range(len(d.arcs)))
    circuits = []
    while unseen:
        start = min(unseen)
        cyc = [start]
        unseen.discard(start)
        e = nxt[start]
        while e != start:
            cyc.append(e)
            unseen.discard(e)
            e = nxt[e]
        circuits.append(tuple(cyc))
    return CircuitPartition(tuple(circuits), d.free_loops)


TRANSITION_ENUMERATION_CUTOFF = 1 << 20


def circuit_partition_polynomial(
    d: BalancedDigraph, max_systems: int = TRANSITION_ENUMERATION_CUTOFF
) -> IntPolynomial:
    """r(D; x): coefficient of x^k counts the partitions into k circuits.

    Computed by enumerating all transition systems (product over vertices
    of (degree)! matchings); each free loop multiplies by x.  For m loops
    on one vertex this yields the rising factorial x(x+1)...(x+m-1).
    """
    total = transition_system_count(d)
    if total > max_systems:
        raise TooLargeError(f"{total} transition systems exceeds {max_systems}")
    counts: dict[int, int] = {}
    for ts in transition_systems(d):
        k = circuit_partition_of(d, ts).circuit_count
        counts[k] = counts.get(k, 0) + 1
    if not counts:
        counts = {d.free_loops: 1}  # arcless digraph: the empty partition
    coeffs = [0] * (max(counts) + 1)
    for k, c in counts.items():
        coeffs[k] = c
    return IntPolynomial(coeffs)


def martin_polynomial(
    d: BalancedDigraph, max_systems: int = TRANSITION_ENUMERATION_CUTOFF
) -> IntPolynomial:
    """m(D; x) = r(D; x-1) / (x-1), exactly.

    Needs at least one arc or free loop, so that r has no constant term
    and the division is exact; otherwise NonzeroRemainderError is raised.
    """
    r = circuit_partition_polynomial(d, max_systems)
    return r.shift_argument(-1).divide_exact_by_x_minus_1()


def word_of_circuit(d: BalancedDigraph, circuit: Sequence[int]) -> DoubleOccurrenceWord:
    """Render an Euler circuit (arc-id cycle) as its vertex-visit word."""
    return DoubleOccurrenceWord(tuple(d.arcs[e][0] for e in circuit))


def euler_circuits_brute(
    d: BalancedDigraph, max_systems: int = TRANSITION_ENUMERATION_CUTOFF
) -> list[DoubleOccurrenceWord]:
    """All Euler circuits, by exhausting transition systems.

    Each single-circuit transition system contributes its vertex-visit
    word; the list length is the Euler circuit count r_1(D).  Entries can
    repeat when parallel arcs make distinct circuits visit vertices in
    the same order.
    """
    if not d.is_connected():
        raise DisconnectedError("Euler circuits need a connected digraph")
    total = transition_system_count(d)
    if total > max_systems:
        raise TooLargeError(f"{total} transition systems exceeds {max_systems}")
    out = []
    for ts in transition_systems(d):
        part = circuit_partition_of(d, ts)
        if part.circuit_count == 1:
            out.append(word_of_circuit(d, part.circuits[0]))
    return out


# -- BEST-theorem counting --------------------------------------------------


def _bareiss_determinant(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[-1][-1]


def euler_circuit_count_best(d: BalancedDigraph) -> int:
    """Euler circuit count of a connected 2-in/2-out digraph.

    By the BEST theorem the count is the number of arborescences into a
    fixed root times prod_v (outdeg(v) - 1)!; with all out-degrees 2 the
    factorial product is 1, and the arborescence count is a cofactor of
    the directed Laplacian (loops excluded -- a loop at a 2-in/2-out
    vertex never changes the tree count).  The cofactor is computed as an
    exact integer determinant.
    """
    if not d.is_two_in_two_out:
        raise ValueError("BEST counting here expects a 2-in/2-out digraph")
    if not d.is_connected():
        raise DisconnectedError("Euler circuits need a connected digraph")
    n = d.order
    lap = [[0] * n for _ in range(n)]
    for t, h in d.arcs:
        if t != h:
            lap[t][t] += 1
            lap[t][h] -= 1
    minor = [row[1:] for row in lap[1:]]
    return _bareiss_determinant(minor)


# -- anti-circuits ----------------------------------------------------------


def anti_circuit_count(d: BalancedDigraph) -> int:
    """Number of anti-circuits of a 2-in/2-out digraph (no free loops).

    An anti-circuit is a closed walk whose consecutive arcs have opposite
    orientations: arriving at a vertex along one in-arc, it leaves
    backwards along the *other* in-arc, and symmetrically for out-arcs.
    Every 2-in/2-out digraph decomposes uniquely into anti-circuits; each
    is found twice (once per traversal direction), as an arc set.
    """
    if not d.is_two_in_two_out:
        raise ValueError("anti-circuits are defined for 2-in/2-out digraphs")
    if d.free_loops:
        raise ValueError("free loops are not part of anti-circuit decompositions")
    in_lists = [d.in_arcs(v) for v in range(d.order)]
    out_lists = [d.out_arcs(v) for v in range(d.order)]

    def step(state):
        e, direction = state
        if direction == FORWARD:  # arrived at head(e) along e
            v = d.arcs[e][1]
            i1, i2 = in_lists[v]
            return (i2 if e == i1 else i1, BACKWARD)
        v = d.arcs[e][0]  # arrived at tail(e) against e
        o1, o2 = out_lists[v]
        return (o2 if e == o1 else o1, FORWARD)

    unseen = {(e, dr) for e in range(len(d.arcs)) for dr in (FORWARD, BACKWARD)}
    arc_sets = set()
    while unseen:
        start = min(unseen)
        cur = start
        arcs = set()
        while True:
            unseen.discard(cur)
            arcs.add(cur[0])
            cur = step(cur)
            if cur == start:
                break
        arc_sets.add(frozenset(arcs))
    return len(arc_sets)


# -- circuit-level transposition orbit --------------------------------------


def _canonical_circuit(cyc: Sequence[int]) -> tuple[int, ...]:
    i = cyc.index(min(cyc))
    return tuple(cyc[i:]) + tuple(cyc[:i])


def transpose_circuit(
    d: BalancedDigraph, circuit: Sequence[int], a: int, b: int
) -> tuple[int, ...]:
    """Transpose an Euler circuit (arc cycle) on an interlaced vertex pair."""
    word = [d.arcs[e][0] for e in circuit]
    pa = [i for i, s in enumerate(word) if s == a]
    pb = [i for i, s in enumerate(word) if s == b]
    p1, p2 = pa
    q1, q2 = pb
    if not p1 < q1 < p2 < q2:
        p1, p2, q1, q2 = q1, q2, p1, p2
    if not p1 < q1 < p2 < q2:
        raise NotInterlacedError(f"vertices {a} and {b} are not interlaced")
    c = tuple(circuit)
    out = c[:p1] + c[p2:q2] + c[q1:p2] + c[p1:q1] + c[q2:]
    return _canonical_circuit(out)


def circuit_transposition_orbit(
    w: DoubleOccurrenceWord, max_size: int = 1 << 22
) -> set[tuple[int, ...]]:
    """Orbit of the word's own circuit under arc-level transpositions.

    The orbit is the full set of Euler circuits of the word's digraph
    (they form a single orbit), so its size equals the BEST count even
    when parallel arcs make several circuits share a visit word.
    """
    d = digraph_from_word(w)
    start = _canonical_circuit(tuple(range(len(d.arcs))))
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        word = [d.arcs[e][0] for e in cur]
        occ: dict[int, list[int]] = {}
        for i, s in enumerate(word):
            occ.setdefault(s, []).append(i)
        for a in range(d.order):
            p1, p2 = occ[a]
            for b in range(a + 1, d.order):
                q1, q2 = occ[b]
                if (p1 < q1 < p2) != (p1 < q2 < p2):
                    nxt = transpose_circuit(d, cur, a, b)
                    if nxt not in seen:
                        if len(seen) >= max_size:
                            raise TooLargeError(f"orbit exceeds {max_size}")
                        seen.add(nxt)
                        stack.append(nxt)
    return seen


# -- vertex resolution (the circuit-partition recursion step) ---------------


def resolve_vertex(
    d: BalancedDigraph, v: int, pairing: Sequence[int]
) -> BalancedDigraph:
    """Resolve vertex v: unite each in-arc with the paired out-arc and
    delete v.  ``pairing`` is a permutation as in a transition system
    entry.  Chains of loops at v collapse; a cycle living entirely in
    loops at v becomes a free loop.  Circuit partitions satisfy
    r(D) = sum of r over the resolutions at any one vertex.
    """
    in_list = d.in_arcs(v)
    out_list = d.out_arcs(v)
    if sorted(pairing) != list(range(len(in_list))):
        raise ValueError("pairing must be a permutation of the arc ends")
    follow = {in_list[i]: out_list[p] for i, p in enumerate(pairing)}
    arcs = []
    free = d.free_loops
    consumed = set(follow) | set(follow.values())
    # walk chains entering v from outside
    for e in range(len(d.arcs)):
        tail, head = d.arcs[e]
        if head != v or tail == v:
            continue
        cur = follow[e]
        while d.arcs[cur][1] == v:  # still a loop at v, keep chaining
            cur = follow[cur]
        arcs.append((tail, d.arcs[cur][1]))
    # cycles consisting purely of loops at v
    loops = [e for e in consumed if d.arcs[e] == (v, v)]
    unseen = set(loops)
    for e in loops:
        if e not in unseen:
            continue
        cur = e
        pure = True
        while True:
            unseen.discard(cur)
            cur = follow[cur]
            if d.arcs[cur] != (v, v):
                pure = False
            if cur == e:
                break
            if not pure:
                break
        if pure:
            free += 1
    # arcs not touching v survive unchanged, with v compacted away
    for e, (t, h) in enumerate(d.arcs):
        if t != v and h != v:
            arcs.append((t, h))
    remap = lambda u: u - (u > v)
    arcs = [(remap(t), remap(h)) for t, h in arcs]
    return BalancedDigraph(d.order - 1, arcs, free)


# -- exhaustive word enumeration --------------------------------------------


def canonical_word_tuples(n: int) -> Iterator[tuple[int, ...]]:
    """All canonical double occurrence words on n symbols, as tuples.

    Enumerates linear arrangements that start with symbol 0 and keeps
    exactly the canonical rotation of each cyclic word.
    """
    if n == 0:
        yield ()
        return
    counts = [1] + [2] * (n - 1)
    length = 2 * n - 1
    word = [0] * (2 * n)

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos > length:
            w = tuple(word)
            if _canonical_rotation(w) == w:
                yield w
            return
        for s in range(n):
            if counts[s]:
                counts[s] -= 1
                word[pos] = s
                yield from rec(pos + 1)
                counts[s] += 1

    yield from rec(1)


def all_double_occurrence_words(n: int) -> Iterator[DoubleOccurrenceWord]:
    """All double occurrence words on n symbols, one per cyclic word."""
    for t in canonical_word_tuples(n):
        yield DoubleOccurrenceWord(t)
