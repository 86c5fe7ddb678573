"""Verification suites: exhaustive identity, orbit, extremal, conjecture.

Each suite sweeps a stated instance universe (all labeled graphs of order
<= n_max, all double occurrence words of <= k symbols, seeded random
corpora), re-checks proved identities and bounds instance by instance,
and returns a VerificationReport.  Proved statements must come back with
zero violations; the conjecture suite distinguishes a violation (a
counterexample, which would be a headline result) from a pass.

Everything is deterministic given (n_max, samples, seed); elapsed_ms is
the one wall-clock field in a report.

Suite internals lean on the vectorized coefficient tables from
`enumeration` for graph sweeps, and on flat tuple/bytes encodings for the
word sweeps; both are cross-checked against the object-level operations
in the unit tests.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from . import enumeration as en
from .euler import (
    DoubleOccurrenceWord,
    _canonical_rotation,
    anti_circuit_count,
    canonical_word_tuples,
    circuit_partition_polynomial,
    digraph_from_word,
    euler_circuit_count_best,
    euler_circuits_brute,
    interlace_graph,
    loops_digraph,
    martin_polynomial,
    resolve_vertex,
)
from .graphs import Graph, matching_number, to_graph6
from .interlace import interlace_polynomial
from .polynomials import (
    IntPolynomial,
    circuit_coeffs_from_interlace,
    interlace_coeffs_from_circuit,
    is_log_concave,
    unimodality_report,
)

MAX_VIOLATIONS_PER_CHECK = 20


@dataclass
class VerificationReport:
    """Outcome of one suite run.

    ``violations`` is empty exactly when the suite passed.  Each entry
    carries the instance encoding under the key "graph6" (a graph6 string
    for graph instances, the word or digraph text for word instances) and
    a human-readable detail.  Violation storage is capped per sub-check;
    the cap entry states how many more there were.
    """

    suite: str
    n_max: int
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    seed: int | None = None
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n_max": self.n_max,
            "checked": self.checked,
            "violations": self.violations,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }

    # -- recording helpers ------------------------------------------------

    def count(self, instances: int) -> None:
        self.checked += instances

    def record(self, instance: str, detail: str) -> None:
        self.violations.append({"graph6": instance, "detail": detail})

    def record_mask_failures(
        self, n: int, masks: np.ndarray, ok: np.ndarray, detail: str
    ) -> None:
        """Record mask-encoded graph instances where ``ok`` is False."""
        self.count(len(masks))
        if ok.all():
            return
        bad = np.flatnonzero(~ok)
        for idx in bad[:MAX_VIOLATIONS_PER_CHECK]:
            mask = int(masks[idx]) if masks.ndim else int(idx)
            self.record(to_graph6(en.graph_of_mask(n, mask)), detail)
        if len(bad) > MAX_VIOLATIONS_PER_CHECK:
            self.record("...", f"{len(bad) - MAX_VIOLATIONS_PER_CHECK} more: {detail}")


def _finish(report: VerificationReport, t0: float) -> VerificationReport:
    report.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return report


# ===========================================================================
# identity suite
# ===========================================================================


def run_identity_suite(
    n_max: int = 6, word_samples: int = 500, seed: int = 20
) -> VerificationReport:
    """Exhaustively check the proved pivot/interlace/circuit identities.

    Graph-side, over every labeled graph of order <= n_max: the pivot
    reduction q(G) = q(G-a) + q(G^{ab}-b) for every oriented edge, pivot
    invariance of q, multiplicativity over disjoint splits, q(2) = 2^n,
    lowest degree = component count, degree bounds (<= n with equality
    only for edgeless, >= independence number, monotone under deletion),
    q(-1) = +/-2^k, pivot involution/symmetry/connectivity/neighborhood
    preservation, and the triple-pivot identities
    G^{(ab)(ac)(ab)} = G_{bc} and G^{(ab)(ac)} = (G^{ac})_{bc}
    (the former is the brute-force-confirmed superscript sequence).

    Tree-side: deg q = order - matching number over all trees of order
    <= 9 (one representative per isomorphism class; q is isomorphism
    invariant).

    Word-side, over exhaustive words of <= 4 symbols plus ``word_samples``
    seeded random words of 3..8 symbols: the bridge x q(H;1+x) = r(D;x),
    q(H) = m(D), Euler counts by brute force / BEST / q(H;1), the
    coefficient transforms, the anti-circuit evaluation r(D;-2), the
    transition-system count r(D;1) = 2^n, and digraph preservation under
    transposition.
    """
    t0 = time.monotonic()
    report = VerificationReport("identities", n_max, seed=seed)

    table = en.CoefficientTable(n_max)
    for n in range(n_max + 1):
        _identity_graph_checks(report, table, n)
    _identity_tree_checks(report)
    _identity_calculus_checks(report, seed)
    _identity_word_checks(report, word_samples, seed)
    return _finish(report, t0)


def _identity_graph_checks(
    report: VerificationReport, table: en.CoefficientTable, n: int
) -> None:
    T = table.table(n)
    masks = np.arange(len(T), dtype=np.int64)
    g6 = lambda mask: to_graph6(en.graph_of_mask(n, int(mask)))

    # q(2) = 2^n and q(-1) = +/- 2^k
    report.record_mask_failures(
        n, masks, table.evaluate(n, 2) == 2**n, "q(2) != 2^order"
    )
    at_minus_1 = np.abs(table.evaluate(n, -1))
    pow2 = (at_minus_1 != 0) & ((at_minus_1 & (at_minus_1 - 1)) == 0)
    report.record_mask_failures(n, masks, pow2, "q(-1) not a signed power of two")

    # coefficients nonnegative; constant term zero iff order >= 1
    report.record_mask_failures(n, masks, (T >= 0).all(axis=1), "negative coefficient")
    const_ok = (T[:, 0] == 0) if n >= 1 else (T[:, 0] == 1)
    report.record_mask_failures(n, masks, const_ok, "constant term wrong")

    # lowest degree = component count; degree bounds
    deg = table.degrees(n)
    report.record_mask_failures(
        n, masks, table.lowest_degrees(n) == en.component_count_table(n),
        "lowest nonzero degree != component count",
    )
    report.record_mask_failures(
        n, masks, (deg < n) | (masks == 0), "degree n on a non-edgeless graph"
    )
    report.record_mask_failures(
        n, masks, deg >= en.independence_number_table(n),
        "degree below independence number",
    )
    if n >= 1:
        prev_deg = table.degrees(n - 1)
        for v in range(n):
            sub = prev_deg[en.delete_vertex_masks(masks, v, n)]
            report.record_mask_failures(
                n, masks, deg >= sub, f"degree dropped below q(G-{v})"
            )

    if n >= 2:
        comp = en.component_count_table(n)
        prev = table.table(n - 1)
        for a in range(n):
            for b in range(n):
                if a == b:
                    continue
                bit = en.pair_index(a, b)
                sel = masks[(masks >> bit & 1) == 1]
                piv = en.pivot_masks(sel, a, b, n)
                # pivot reduction, every oriented edge
                left = prev[en.delete_vertex_masks(sel, a, n)]
                right = prev[en.delete_vertex_masks(piv, b, n)]
                ok = (T[sel, :n] == left + right).all(axis=1) & (T[sel, n] == 0)
                report.record_mask_failures(
                    n, sel, ok, f"q != q(G-{a}) + q(G^({a}{b})-{b})"
                )
                if a < b:
                    # pivot invariance of q, involution, symmetry
                    report.record_mask_failures(
                        n, sel, (T[piv] == T[sel]).all(axis=1), "q(G^ab) != q(G)"
                    )
                    report.record_mask_failures(
                        n, sel, en.pivot_masks(piv, a, b, n) == sel,
                        "pivot is not an involution",
                    )
                    report.record_mask_failures(
                        n, sel, en.pivot_masks(sel, b, a, n) == piv,
                        "pivot not symmetric in a,b",
                    )
                    # connectivity preserved; neighborhoods of a,b fixed
                    report.record_mask_failures(
                        n, sel, (comp[sel] != 1) | (comp[piv] == 1),
                        "pivot disconnected a connected graph",
                    )
                    frozen = en.incident_bits(n, a) | en.incident_bits(n, b)
                    report.record_mask_failures(
                        n, sel, ((sel ^ piv) & frozen) == 0,
                        "pivot changed the neighborhood of a or b",
                    )

    # triple-pivot identities on all ordered triples with ab, ac edges
    if n >= 3:
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if len({a, b, c}) < 3:
                        continue
                    need = (1 << en.pair_index(a, b)) | (1 << en.pair_index(a, c))
                    sel = masks[(masks & need) == need]
                    after_two = en.pivot_masks(
                        en.pivot_masks(sel, a, b, n), a, c, n
                    )
                    lhs = en.pivot_masks(after_two, a, b, n)
                    report.record_mask_failures(
                        n, sel, lhs == en.label_swap_masks(sel, b, c, n),
                        f"pivot triple ({a}{b})({a}{c})({a}{b}) != swap {b}{c}",
                    )
                    rhs = en.label_swap_masks(
                        en.pivot_masks(sel, a, c, n), b, c, n
                    )
                    report.record_mask_failures(
                        n, sel, after_two == rhs,
                        f"pivot pair ({a}{b})({a}{c}) != swapped ({a}{c})",
                    )

    # multiplicativity over explicit disjoint splits (small side second)
    for n2 in range(1, n // 2 + 1):
        n1 = n - n2
        big = table.table(n1)
        big_masks = np.arange(len(big), dtype=np.int64)
        for mask2 in range(1 << en.pair_count(n2)):
            shifted = 0
            for i, j in combinations(range(n2), 2):
                if mask2 >> en.pair_index(i, j) & 1:
                    shifted |= 1 << en.pair_index(n1 + i, n1 + j)
            small = table.table(n2)[mask2]
            expected = np.zeros((len(big), n + 1), dtype=np.int64)
            for d2 in range(n2 + 1):
                if small[d2]:
                    expected[:, d2 : d2 + n1 + 1] += small[d2] * big
            union = big_masks | shifted
            ok = (T[union] == expected).all(axis=1)
            report.record_mask_failures(
                n, union, ok, f"q(G1 u G2) != q(G1) q(G2) [split {n1}+{n2}]"
            )


def _identity_tree_checks(report: VerificationReport, max_order: int = 9) -> None:
    cache: dict = {}
    for n in range(1, max_order + 1):
        for tree in en.free_trees(n):
            q = interlace_polynomial(tree, cache)
            report.count(1)
            if q.degree != n - matching_number(tree):
                report.record(
                    to_graph6(tree), "tree degree != order - matching number"
                )


def _identity_calculus_checks(
    report: VerificationReport, seed: int, rotations: int = 1000
) -> None:
    """Rotation inequality and the substitution calculus, randomized."""
    from .interlace import (
        clique_substitution_polynomial,
        rotate,
        solid_graph,
        substitute,
        thick_graph,
        vertex_duplication_polynomial,
        vertex_multiplication_polynomial,
    )
    from .graphs import delete_vertex, edgeless_graph

    rng = random.Random(seed)
    cache: dict = {}

    def rand_graph(n):
        return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])

    for _ in range(rotations):
        g = rand_graph(rng.randrange(2, 8))
        u = rng.randrange(g.n)
        v = (u + 1 + rng.randrange(g.n - 1)) % g.n
        qg = interlace_polynomial(g, cache)
        qh = interlace_polynomial(rotate(g, u, v), cache)
        for x0 in (1, 2, 3):
            report.count(1)
            if qg.evaluate(x0) > qh.evaluate(x0):
                report.record(to_graph6(g), f"rotation inequality fails at x={x0}")

    for _ in range(120):
        t = rand_graph(rng.randrange(1, 5))
        sizes = [rng.randrange(1, 4) for _ in range(t.n)]
        solid = solid_graph(t, sizes)
        report.count(1)
        if interlace_polynomial(solid, cache) != clique_substitution_polynomial(
            interlace_polynomial(t, cache), solid.n - t.n
        ):
            report.record(to_graph6(t), "clique substitution scaling fails")

        g = rand_graph(rng.randrange(1, 7))
        a = rng.randrange(g.n)
        dup = substitute(
            g, [edgeless_graph(2 if v == a else 1) for v in range(g.n)]
        )
        ga, _ = delete_vertex(g, a)
        report.count(1)
        if interlace_polynomial(dup, cache) != vertex_duplication_polynomial(
            interlace_polynomial(g, cache), interlace_polynomial(ga, cache)
        ):
            report.record(to_graph6(g), "vertex duplication formula fails")

        h = rand_graph(rng.randrange(1, 5))
        ks = [rng.randrange(1, 4) for _ in range(h.n)]
        report.count(1)
        if vertex_multiplication_polynomial(h, ks, cache) != interlace_polynomial(
            thick_graph(h, ks), cache
        ):
            report.record(to_graph6(h), "vertex multiplication expansion fails")

    # two different order-9 trees sharing one polynomial
    t1 = Graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7), (4, 8)])
    t2 = Graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7), (4, 8)])
    expected = IntPolynomial((0, 2, 9, 17, 13, 4))
    report.count(1)
    if not (
        interlace_polynomial(t1, cache)
        == interlace_polynomial(t2, cache)
        == expected
    ):
        report.record(to_graph6(t1), "order-9 tree pair regression value")


def _word_corpus(word_samples: int, seed: int) -> list[DoubleOccurrenceWord]:
    words = [
        DoubleOccurrenceWord(t)
        for n in range(1, 5)
        for t in canonical_word_tuples(n)
    ]
    rng = random.Random(seed)
    for _ in range(word_samples):
        n = rng.randint(3, 8)
        syms = list(range(n)) * 2
        rng.shuffle(syms)
        words.append(DoubleOccurrenceWord(syms))
    return words


def _identity_word_checks(
    report: VerificationReport, word_samples: int, seed: int
) -> None:
    from .euler import interlaced, transpose

    cache: dict = {}
    for w in _word_corpus(word_samples, seed):
        wtext = str(w)
        h = interlace_graph(w)
        d = digraph_from_word(w)
        q = interlace_polynomial(h, cache)
        r = circuit_partition_polynomial(d)
        report.count(1)
        if q.shift_argument(1).mul_x() != r:
            report.record(wtext, "x q(H;1+x) != r(D;x)")
        report.count(1)
        if martin_polynomial(d) != q:
            report.record(wtext, "q(H) != m(D)")
        report.count(1)
        if circuit_coeffs_from_interlace(list(q.coeffs)) != list(r.coeffs):
            report.record(wtext, "coefficient transform q->r mismatch")
        report.count(1)
        if interlace_coeffs_from_circuit(list(r.coeffs)) != list(q.coeffs):
            report.record(wtext, "coefficient transform r->q mismatch")
        report.count(1)
        brute = len(euler_circuits_brute(d))
        best = euler_circuit_count_best(d)
        if not (brute == best == q.evaluate(1) == r.coefficient(1)):
            report.record(wtext, "Euler circuit counts disagree")
        report.count(1)
        if r.evaluate(1) != 2**w.n:
            report.record(wtext, "sum of r_k != 2^order")
        report.count(1)
        a = anti_circuit_count(d)
        if r.evaluate(-2) != (-1) ** (w.n + a) * 2**a:
            report.record(wtext, "r(D;-2) != (-1)^(n+a) 2^a")
        # resolving any one vertex splits r into the two resolutions
        report.count(1)
        r0 = circuit_partition_polynomial(resolve_vertex(d, 0, (0, 1)))
        r1 = circuit_partition_polynomial(resolve_vertex(d, 0, (1, 0)))
        if r0 + r1 != r:
            report.record(wtext, "r != sum of the two vertex resolutions")
        # transposition preserves the digraph
        for x in range(w.n):
            for y in range(x + 1, w.n):
                if interlaced(w, x, y):
                    report.count(1)
                    if digraph_from_word(transpose(w, x, y)) != d:
                        report.record(wtext, f"transpose({x},{y}) changed digraph")


# ===========================================================================
# orbit suite (words of <= max_symbols symbols, exhaustively)
# ===========================================================================


def run_orbit_suite(max_symbols: int = 5) -> VerificationReport:
    """Exhaustive word-orbit laws on all words of <= max_symbols symbols.

    For every labeled 2-in/2-out digraph realized by such words (words
    grouped by their digraph): the Euler circuits form a single orbit
    under arc-level transpositions whose size is the BEST-theorem count
    and q(H;1); the words of those circuits are exactly the digraph's
    words; the interlace graphs along every transposition follow the
    pivot-plus-swap commutation rule; and the "partition each other"
    properties hold: digraphs sharing an interlace graph have identical
    interlace-graph sets, and interlace graphs sharing a digraph have
    identical digraph sets.
    """
    t0 = time.monotonic()
    report = VerificationReport("orbits", max_symbols)
    for n in range(1, max_symbols + 1):
        _orbit_checks_for_order(report, n)
    return _finish(report, t0)


def _word_hmask(w: tuple[int, ...], n: int) -> int:
    first = [-1] * n
    second = [0] * n
    for i, s in enumerate(w):
        if first[s] < 0:
            first[s] = i
        else:
            second[s] = i
    mask = 0
    for a in range(n):
        p1, p2 = first[a], second[a]
        for b in range(a + 1, n):
            if (p1 < first[b] < p2) != (p1 < second[b] < p2):
                mask |= 1 << en.pair_index(a, b)
    return mask


def _transpose_raw(
    w: tuple[int, ...], p1: int, q1: int, p2: int, q2: int
) -> tuple[int, ...]:
    # positions must satisfy p1 < q1 < p2 < q2 (a at p1,p2; b at q1,q2)
    return w[: p1 + 1] + w[p2 + 1 : q2] + w[q1 : p2 + 1] + w[p1 + 1 : q1] + w[q2:]


def _swap_pivot_tables(n: int) -> dict[tuple[int, int], np.ndarray]:
    """For each vertex pair, the map H -> (H^{ab})_{ab} on edge masks.

    Rows are only meaningful for masks containing the ab edge.
    """
    masks = np.arange(1 << en.pair_count(n), dtype=np.int64)
    out = {}
    for a in range(n):
        for b in range(a + 1, n):
            out[(a, b)] = en.label_swap_masks(
                en.pivot_masks(masks, a, b, n), a, b, n
            )
    return out


def _orbit_checks_for_order(report: VerificationReport, n: int) -> None:
    swap_pivot = _swap_pivot_tables(n)
    q1_of_mask = en.CoefficientTable(n).evaluate(n, 1)

    # pass 1: group canonical words by digraph; compute interlace masks
    groups: dict[bytes, list[tuple[int, ...]]] = {}
    hmask: dict[tuple[int, ...], int] = {}
    for w in canonical_word_tuples(n):
        arcs = sorted((w[i], w[(i + 1) % len(w)]) for i in range(len(w)))
        dkey = bytes(v for arc in arcs for v in arc)
        groups.setdefault(dkey, []).append(w)
        hmask[w] = _word_hmask(w, n)

    # pass 2: per word, transpositions preserve the group and the
    # interlace graphs commute with pivot-plus-swap (exhaustive)
    group_of = {w: dk for dk, ws in groups.items() for w in ws}
    for w, dk in group_of.items():
        first = [-1] * n
        second = [0] * n
        for i, s in enumerate(w):
            if first[s] < 0:
                first[s] = i
            else:
                second[s] = i
        h = hmask[w]
        for a in range(n):
            p1, p2 = first[a], second[a]
            for b in range(a + 1, n):
                q1, q2 = first[b], second[b]
                crosses = (p1 < q1 < p2) != (p1 < q2 < p2)
                if not crosses:
                    continue
                if p1 < q1 < p2 < q2:
                    t = _transpose_raw(w, p1, q1, p2, q2)
                else:
                    t = _transpose_raw(w, q1, p1, q2, p2)
                t = _canonical_rotation(t)
                report.count(2)
                if group_of.get(t) != dk:
                    report.record(_word_text(w), "transposition left the digraph")
                if hmask[t] != int(swap_pivot[(a, b)][h]):
                    report.record(
                        _word_text(w), f"H(transpose {a},{b}) != swapped pivot"
                    )

    # pass 3: per digraph, the circuit orbit is everything
    for dkey, words in groups.items():
        rep = words[0]
        best = _best_count_raw(rep, n)
        orbit_words, orbit_size = _circuit_orbit_raw(rep, n)
        q1 = int(q1_of_mask[hmask[rep]])
        report.count(3)
        if orbit_size != best:
            report.record(_word_text(rep), "circuit orbit size != BEST count")
        if best != q1:
            report.record(_word_text(rep), "BEST count != q(H;1)")
        if orbit_words != set(words):
            report.record(_word_text(rep), "circuit orbit words != digraph's words")

    # pass 4: interlace-graph sets and digraph sets partition each other
    hset_of_group: dict[bytes, frozenset[int]] = {
        dk: frozenset(hmask[w] for w in ws) for dk, ws in groups.items()
    }
    groups_of_h: dict[int, set[bytes]] = {}
    for dk, hs in hset_of_group.items():
        for h in hs:
            groups_of_h.setdefault(h, set()).add(dk)
    for h, dks in groups_of_h.items():
        report.count(1)
        if len({hset_of_group[dk] for dk in dks}) != 1:
            report.record(
                f"order-{n} interlace mask {h}",
                "digraphs sharing an interlace graph differ in H-sets",
            )
    for dk, hs in hset_of_group.items():
        report.count(1)
        if len({frozenset(groups_of_h[h]) for h in hs}) != 1:
            report.record(
                _word_text(groups[dk][0]),
                "interlace graphs sharing a digraph differ in D-sets",
            )


def _word_text(w: tuple[int, ...]) -> str:
    return " ".join(str(s + 1) for s in w)


def _best_count_raw(w: tuple[int, ...], n: int) -> int:
    from .euler import _bareiss_determinant

    lap = [[0] * n for _ in range(n)]
    for i in range(len(w)):
        t, h = w[i], w[(i + 1) % len(w)]
        if t != h:
            lap[t][t] += 1
            lap[t][h] -= 1
    return _bareiss_determinant([row[1:] for row in lap[1:]])


def _circuit_orbit_raw(w: tuple[int, ...], n: int) -> tuple[set, int]:
    """BFS the arc-level transposition orbit of the word's own circuit.

    Returns (set of canonical visit words, orbit size).  Arc e runs from
    w[e] to w[e+1], so the visit word of a circuit is w gathered along it.
    """
    length = len(w)
    start = tuple(range(length))
    seen = {start}
    stack = [start]
    words = set()
    while stack:
        c = stack.pop()
        word = tuple(w[e] for e in c)
        words.add(_canonical_rotation(word))
        first = [-1] * n
        second = [0] * n
        for i, s in enumerate(word):
            if first[s] < 0:
                first[s] = i
            else:
                second[s] = i
        for a in range(n):
            p1, p2 = first[a], second[a]
            for b in range(a + 1, n):
                q1, q2 = first[b], second[b]
                if (p1 < q1 < p2) == (p1 < q2 < p2):
                    continue
                if not p1 < q1 < p2 < q2:
                    r1, s1, r2, s2 = q1, p1, q2, p2
                else:
                    r1, s1, r2, s2 = p1, q1, p2, q2
                # arc-level exchange: the arcs spanning each a-to-b
                # stretch move as a block (c[r1:s1] and c[r2:s2])
                t = c[:r1] + c[r2:s2] + c[s1:r2] + c[r1:s1] + c[s2:]
                i = t.index(0)
                t = t[i:] + t[:i]
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
    return words, len(seen)


# ===========================================================================
# extremal suite
# ===========================================================================


def run_extremal_suite(n_max: int = 7) -> VerificationReport:
    """Check the extremal bounds on q(G;1), degree, and term counts, with
    their equality characterizations, over all labeled graphs of order
    <= n_max.

    Bounds: q(1) >= e(G)+1 (equality: complete tripartite plus isolated
    vertices); q(1) <= F_{m+2} for connected G with m edges (equality:
    paths), with the componentwise product bound for disconnected G and
    q(1) <= 2^m (equality: independent edges plus isolated vertices);
    q(1) >= n for G without isolated vertices (equality: stars, or two
    independent edges at n=4); q(1) <= 2^(n-1) (equality: complete);
    the second-largest value of q(1) is 3·2^(n-3), attained exactly by
    solid three-class path graphs; deg q <= n (equality: edgeless) and
    q(1) >= 1 (equality: edgeless); exactly-two-term polynomials come
    from one solid path of length 2 or 3 plus complete components; and
    (n-1)-term polynomials force 2x + x^2 + ... + x^(n-1) on a star.
    """
    t0 = time.monotonic()
    report = VerificationReport("extremal", n_max)
    table = en.CoefficientTable(n_max)
    fib = [0, 1]
    while len(fib) < en.pair_count(n_max) + 4:
        fib.append(fib[-1] + fib[-2])
    for n in range(n_max + 1):
        _extremal_checks_for_order(report, table, n, fib)
    return _finish(report, t0)


def _extremal_checks_for_order(
    report: VerificationReport, table: en.CoefficientTable, n: int, fib: list[int]
) -> None:
    T = table.table(n)
    masks = np.arange(len(T), dtype=np.int64)
    q1 = table.evaluate(n, 1)
    edges = en.edge_count_table(n)
    comp = en.component_count_table(n)
    isolated = en.isolated_count_table(n)
    connected = comp == 1

    # size lower bound and its equality class
    report.record_mask_failures(n, masks, q1 >= edges + 1, "q(1) < e(G)+1")
    eq_set = {int(m) for m in masks[q1 == edges + 1]}
    expected = _tripartite_plus_isolated_masks(n)
    report.count(1)
    if eq_set != expected:
        report.record(f"order {n}", "q(1)=e+1 class != tripartite+isolated class")

    # size upper bounds
    fib_bound = np.array([fib[int(m) + 2] for m in edges], dtype=np.int64)
    report.record_mask_failures(
        n, masks[connected], (q1 <= fib_bound)[connected],
        "connected q(1) > F_{m+2}",
    )
    eq_paths = {int(m) for m in masks[connected & (q1 == fib_bound)]}
    report.count(1)
    if n >= 2 and eq_paths != _labeled_path_masks(n):
        report.record(f"order {n}", "Fibonacci equality class != paths")
    _componentwise_fibonacci_check(report, n, comp, q1, fib)
    report.record_mask_failures(n, masks, q1 <= 2**edges, "q(1) > 2^e")
    eq_match = {int(m) for m in masks[q1 == 2**edges]}
    report.count(1)
    if eq_match != _matching_masks(n):
        report.record(f"order {n}", "q(1)=2^e class != independent-edge class")

    # order bounds
    no_iso = isolated == 0
    report.record_mask_failures(
        n, masks[no_iso], (q1 >= n)[no_iso], "q(1) < n without isolated vertices"
    )
    if n >= 2:
        eq_ord = {int(m) for m in masks[no_iso & (q1 == n)]}
        expected_ord = _star_masks(n)
        if n == 4:
            expected_ord |= {m for m in _matching_masks(4) if bin(m).count("1") == 2}
        report.count(1)
        if eq_ord != expected_ord:
            report.record(f"order {n}", "q(1)=n class != stars (+2K_2 at n=4)")
    report.record_mask_failures(n, masks, q1 <= 2 ** (n - 1) if n else q1 <= 1,
                                "q(1) > 2^(n-1)")
    if n >= 1:
        full = (1 << en.pair_count(n)) - 1
        eq_top = masks[q1 == 2 ** (n - 1)]
        report.count(1)
        if set(map(int, eq_top)) != {full}:
            report.record(f"order {n}", "q(1)=2^(n-1) attained off the complete graph")

    # second-maximum value of q(1)
    if n >= 3:
        second = 3 * 2 ** (n - 3)
        top = 2 ** (n - 1)
        report.record_mask_failures(
            n, masks, (q1 == top) | (q1 <= second), "q(1) strictly between the two top values"
        )
        eq_second = {int(m) for m in masks[q1 == second]}
        report.count(1)
        if eq_second != _solid_path2_masks(n):
            report.record(f"order {n}", "second-maximum class != solid P2 graphs")

    # q(1) >= 1 with equality only for edgeless; deg = n only for edgeless
    report.record_mask_failures(n, masks, q1 >= 1, "q(1) < 1")
    report.count(1)
    if set(map(int, masks[q1 == 1])) != {0}:
        report.record(f"order {n}", "q(1)=1 off the edgeless graph")

    # term-count characterizations.  The two-term classification (one
    # solid path of length 2 or 3, all other components complete) is
    # FALSE: the 4-cycle (2x + 3x^2) and the 5-cycle (6x + 5x^2) already
    # have exactly two nonzero terms, and larger counterexample families
    # exist at every order.  The check is kept as stated and reports the
    # counterexamples; the true converse (solid path plus complete
    # components gives two terms) is checked separately below.
    terms = table.nonzero_term_counts(n)
    two_term = masks[terms == 2]
    ok_two = np.fromiter(
        (
            _is_solid_path_plus_complete(en.graph_of_mask(n, int(mask)))
            for mask in two_term
        ),
        dtype=bool,
        count=len(two_term),
    )
    report.record_mask_failures(
        n, two_term, ok_two,
        "two-term graph is not solid-path + complete components",
    )
    for mask in _solid_path_plus_complete_masks(n):
        report.count(1)
        if terms[mask] != 2:
            report.record(
                to_graph6(en.graph_of_mask(n, mask)),
                "solid path + complete components without exactly two terms",
            )
    if n >= 3:
        want = np.zeros(n + 1, dtype=np.int64)
        want[1] = 2
        want[2:n] = 1
        sel = terms == n - 1
        report.record_mask_failures(
            n, masks[sel], (T[sel] == want).all(axis=1),
            "(n-1)-term polynomial is not 2x + x^2 + ... + x^(n-1)",
        )
        star_set = _star_masks(n)
        in_stars = np.fromiter(
            (int(mask) in star_set for mask in masks[sel]),
            dtype=bool,
            count=int(sel.sum()),
        )
        report.record_mask_failures(
            n, masks[sel], in_stars, "(n-1)-term graph is not a star"
        )


def _tripartite_plus_isolated_masks(n: int) -> set[int]:
    out = set()
    for assign in range(4**n):
        cls = [(assign >> (2 * v)) & 3 for v in range(n)]
        mask = 0
        for i, j in combinations(range(n), 2):
            if cls[i] != cls[j] and cls[i] < 3 and cls[j] < 3:
                mask |= 1 << en.pair_index(i, j)
        out.add(mask)
    return out


def _labeled_path_masks(n: int) -> set[int]:
    from itertools import permutations

    out = set()
    for perm in permutations(range(n)):
        if perm[0] > perm[-1]:
            continue  # each path once, not once per direction
        mask = 0
        for i in range(n - 1):
            mask |= 1 << en.pair_index(perm[i], perm[i + 1])
        out.add(mask)
    return out


def _matching_masks(n: int) -> set[int]:
    out = set()

    def rec(avail: list[int], mask: int):
        out.add(mask)
        if len(avail) < 2:
            return
        v = avail[0]
        rest = avail[1:]
        rec(rest, mask)  # v stays isolated
        for i, u in enumerate(rest):
            rec(rest[:i] + rest[i + 1 :], mask | 1 << en.pair_index(v, u))

    rec(list(range(n)), 0)
    return out


def _star_masks(n: int) -> set[int]:
    out = set()
    for center in range(n):
        mask = 0
        for v in range(n):
            if v != center:
                mask |= 1 << en.pair_index(center, v)
        out.add(mask)
    return out


def _solid_path2_masks(n: int) -> set[int]:
    """Solid three-class path graphs: cliques A,B,C (all nonempty) with
    complete joins A-B and B-C and nothing between A and C."""
    out = set()
    for assign in range(3**n):
        cls = [0] * n
        a = assign
        for v in range(n):
            cls[v] = a % 3
            a //= 3
        if len(set(cls)) != 3:
            continue
        mask = 0
        for i, j in combinations(range(n), 2):
            if {cls[i], cls[j]} != {0, 2}:
                mask |= 1 << en.pair_index(i, j)
        out.add(mask)
    return out


def _set_partitions(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1 :]
        yield part + [[first]]


def _solid_path_plus_complete_masks(n: int) -> set[int]:
    """All labeled graphs made of one solid path of length 2 or 3 plus
    complete components: the true direction of the two-term statement."""
    from itertools import product

    out = set()
    for k in (3, 4):  # path template classes (length 2 or 3)
        if k > n:
            continue
        for assign in product(range(k + 1), repeat=n):
            if any(c not in assign for c in range(k)):
                continue
            mask = 0
            for i, j in combinations(range(n), 2):
                ci, cj = assign[i], assign[j]
                if ci < k and cj < k and abs(ci - cj) <= 1:
                    mask |= 1 << en.pair_index(i, j)
            rest = [v for v in range(n) if assign[v] == k]
            for part in _set_partitions(rest):
                full = mask
                for block in part:
                    for a, b in combinations(block, 2):
                        full |= 1 << en.pair_index(a, b)
                out.add(full)
    return out


def _componentwise_fibonacci_check(
    report: VerificationReport, n: int, comp: np.ndarray, q1: np.ndarray, fib: list[int]
) -> None:
    from .graphs import component_masks

    disconnected = np.flatnonzero(comp >= 2)
    for mask in map(int, disconnected):
        g = en.graph_of_mask(n, mask)
        bound = 1
        for cm in component_masks(g):
            verts = [v for v in range(n) if cm >> v & 1]
            m_edges = sum(
                1 for a, b in combinations(verts, 2) if g.has_edge(a, b)
            )
            bound *= fib[m_edges + 2]
        report.count(1)
        if int(q1[mask]) > bound:
            report.record(to_graph6(g), "q(1) > product of component Fibonacci bounds")


def _true_twin_classes(g: Graph) -> list[int]:
    closed = [g.rows[v] | (1 << v) for v in range(g.n)]
    reps: list[int] = []
    cls = [0] * g.n
    for v in range(g.n):
        for i, r in enumerate(reps):
            if closed[v] == r:
                cls[v] = i
                break
        else:
            cls[v] = len(reps)
            reps.append(closed[v])
    return cls


def _is_solid_path_plus_complete(g: Graph) -> bool:
    from .graphs import component_masks, induced_subgraph

    path_components = 0
    for cm in component_masks(g):
        sub = induced_subgraph(g, [v for v in range(g.n) if cm >> v & 1])
        if sub.edge_count == sub.n * (sub.n - 1) // 2:
            continue  # complete component
        cls = _true_twin_classes(sub)
        k = max(cls) + 1
        if k not in (3, 4):
            return False
        # quotient must be the path 0-1-...-k-1 after sorting classes along it
        quotient = {(min(cls[a], cls[b]), max(cls[a], cls[b])) for a, b in sub.edges()
                    if cls[a] != cls[b]}
        degrees = [0] * k
        for a, b in quotient:
            degrees[a] += 1
            degrees[b] += 1
        if sorted(degrees) != [1, 1] + [2] * (k - 2) or len(quotient) != k - 1:
            return False
        path_components += 1
    return path_components == 1


# ===========================================================================
# conjecture suite
# ===========================================================================


def run_conjecture_suite(
    n_max: int = 7,
    random_samples: int = 5000,
    random_max_order: int = 13,
    seed: int = 20,
) -> VerificationReport:
    """Evidence run for the coefficient-shape conjectures.

    Checks that the coefficients of q(G) and of x q(G; 1+x) are unimodal
    with no internal zeros: exhaustively for all labeled graphs of order
    <= n_max, then on ``random_samples`` seeded random graphs (edge
    probability 1/2) of orders up to ``random_max_order``.  A violation
    here is a counterexample to an open conjecture, not a bug indicator.
    Also confirms the known non-log-concavity witness 2x + x^2 + x^3 (the
    3-leaf star), so the unimodality evidence is not mistaken for the
    stronger property.
    """
    t0 = time.monotonic()
    report = VerificationReport("conjectures", n_max, seed=seed)
    table = en.CoefficientTable(n_max)
    for n in range(n_max + 1):
        T = table.table(n)
        ok_q = _unimodal_rows(T)
        report.record_mask_failures(
            n, np.arange(len(T), dtype=np.int64), ok_q, "q coefficients not unimodal"
        )
        ok_r = _unimodal_rows(_circuit_transform_rows(T))
        report.record_mask_failures(
            n, np.arange(len(T), dtype=np.int64), ok_r,
            "x q(1+x) coefficients not unimodal",
        )

    rng = random.Random(seed)
    for _ in range(random_samples):
        n = rng.randint(n_max + 1, random_max_order)
        edges = [e for e in combinations(range(n), 2) if rng.getrandbits(1)]
        g = Graph(n, edges)
        q = interlace_polynomial(g, {})
        r = IntPolynomial(circuit_coeffs_from_interlace(list(q.coeffs)))
        report.count(2)
        if not unimodality_report(q).is_unimodal:
            report.record(to_graph6(g), "q coefficients not unimodal")
        if not unimodality_report(r).is_unimodal:
            report.record(to_graph6(g), "x q(1+x) coefficients not unimodal")

    # the known witness: q of the 3-leaf star is unimodal but not log-concave
    from .interlace import star_polynomial

    witness = star_polynomial(3)
    report.count(1)
    if is_log_concave(witness) or not unimodality_report(witness).is_unimodal:
        report.record("K_{1,3}", "expected non-log-concave unimodal witness")
    return _finish(report, t0)


def _unimodal_rows(T: np.ndarray) -> np.ndarray:
    """Rows whose support is a contiguous unimodal block (internal zeros
    count as failures)."""
    rows, cols = T.shape
    nz = T != 0
    any_nz = nz.any(axis=1)
    lo = np.argmax(nz, axis=1)
    hi = cols - 1 - np.argmax(nz[:, ::-1], axis=1)
    idx = np.arange(cols)
    internal_zero = ((T == 0) & (idx >= lo[:, None]) & (idx <= hi[:, None])).any(axis=1)
    descending = np.zeros(rows, dtype=bool)
    broke = np.zeros(rows, dtype=bool)
    for k in range(1, cols):
        inside = (k - 1 >= lo) & (k <= hi)
        broke |= descending & (T[:, k] > T[:, k - 1]) & inside
        descending |= (T[:, k] < T[:, k - 1]) & inside
    return (~(internal_zero | broke)) | ~any_nz


def _circuit_transform_rows(T: np.ndarray) -> np.ndarray:
    """Coefficients of x p(1+x) for every row p of T."""
    rows, cols = T.shape
    B = np.zeros((cols, cols + 1), dtype=np.int64)
    for l in range(cols):
        for k in range(1, l + 2):
            B[l, k] = comb(l, k - 1)
    return T @ B


# ===========================================================================
# small-scale cross-checks used by the test-suite
# ===========================================================================


def loop_digraph_polynomials(max_loops: int = 8) -> list[IntPolynomial]:
    """r for 1..max_loops loops on one vertex (rising factorials)."""
    return [circuit_partition_polynomial(loops_digraph(m)) for m in range(1, max_loops + 1)]
