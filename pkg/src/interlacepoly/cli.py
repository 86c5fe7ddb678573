"""Command-line front end.

Subcommands:

    poly       compute the interlace polynomial of a graph file
    euler      Euler-circuit counting / circuit partition analysis of a word
    enumerate  stream every labeled graph of an order with its polynomial
    verify     run a verification suite (identities | extremal | conjectures)

Exit codes: 0 all checks passed / output produced, 1 violations found,
2 usage error (bad arguments or malformed input).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import enumeration as en
from .euler import (
    DoubleOccurrenceWord,
    circuit_partition_polynomial,
    circuit_transposition_orbit,
    digraph_from_word,
    euler_circuit_count_best,
    martin_polynomial,
    transposition_orbit,
)
from .graphs import Graph, from_graph6, parse_edge_list, to_graph6
from .interlace import interlace_polynomial
from .suites import (
    run_conjecture_suite,
    run_extremal_suite,
    run_identity_suite,
    run_orbit_suite,
)

ENUMERATE_DEFAULT_LIMIT = 7


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"graphs cannot be read from format {fmt!r}")


def cmd_poly(args: argparse.Namespace) -> int:
    g = _load_graph(_read_input(args.input), args.format)
    q = interlace_polynomial(g)
    if args.json:
        print(json.dumps(q.to_json_dict()))
    else:
        print(q)
    return 0


def cmd_euler(args: argparse.Namespace) -> int:
    w = DoubleOccurrenceWord.parse(_read_input(args.input))
    d = digraph_from_word(w)
    if args.action == "count":
        count = euler_circuit_count_best(d)
        print(json.dumps({"euler_circuits": str(count)}) if args.json else count)
    elif args.action == "partitions":
        r = circuit_partition_polynomial(d)
        print(json.dumps(r.to_json_dict()) if args.json else r)
    elif args.action == "martin":
        m = martin_polynomial(d)
        print(json.dumps(m.to_json_dict()) if args.json else m)
    else:  # orbit
        circuits = circuit_transposition_orbit(w)
        words = sorted(str(v) for v in transposition_orbit(w))
        if args.json:
            print(
                json.dumps(
                    {"euler_circuits": len(circuits), "words": words}
                )
            )
        else:
            print(f"euler circuits (circuit orbit size): {len(circuits)}")
            print(f"distinct visit words: {len(words)}")
            for v in words:
                print(v)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    n = args.n
    if n > ENUMERATE_DEFAULT_LIMIT and not args.force:
        print(
            f"order {n} exceeds {ENUMERATE_DEFAULT_LIMIT}"
            " (2^C(n,2) graphs); pass --force to proceed",
            file=sys.stderr,
        )
        return 2
    if n <= en.TABLE_MAX_ORDER:
        rows = en.CoefficientTable(n).table(n)
        polys = ((mask, tuple(map(int, rows[mask]))) for mask in range(len(rows)))
    else:
        cache: dict = {}

        def stream():
            for mask in range(1 << en.pair_count(n)):
                g = en.graph_of_mask(n, mask)
                q = interlace_polynomial(g, cache)
                yield mask, q.coeffs + (0,) * (n + 1 - len(q.coeffs))

        polys = stream()

    from .graphs import is_connected
    from .polynomials import IntPolynomial

    if args.distinct:
        census: dict[tuple, list] = {}
        for mask, coeffs in polys:
            g = en.graph_of_mask(n, mask)
            if args.connected and not is_connected(g):
                continue
            entry = census.setdefault(coeffs, [0, mask])
            entry[0] += 1
        for coeffs, (count, mask) in sorted(census.items(), key=lambda kv: kv[1][1]):
            q = IntPolynomial(coeffs)
            g6 = to_graph6(en.graph_of_mask(n, mask))
            if args.json:
                print(
                    json.dumps(
                        {"count": count, "graph6": g6, **q.to_json_dict()}
                    )
                )
            else:
                print(f"{count}\t{g6}\t{q}")
    else:
        for mask, coeffs in polys:
            g = en.graph_of_mask(n, mask)
            if args.connected and not is_connected(g):
                continue
            q = IntPolynomial(coeffs)
            if args.json:
                print(json.dumps({"graph6": to_graph6(g), **q.to_json_dict()}))
            else:
                print(f"{to_graph6(g)}\t{q}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    reports = []
    if args.suite == "identities":
        reports.append(
            run_identity_suite(
                n_max=args.n_max, word_samples=args.samples, seed=args.seed
            )
        )
        reports.append(run_orbit_suite(max_symbols=args.words_n_max))
    elif args.suite == "extremal":
        reports.append(run_extremal_suite(n_max=args.n_max))
    else:
        reports.append(
            run_conjecture_suite(
                n_max=args.n_max, random_samples=args.samples, seed=args.seed
            )
        )
    failed = False
    for rep in reports:
        if args.json:
            print(json.dumps(rep.to_json_dict()))
        else:
            status = "PASS" if rep.passed else f"FAIL ({len(rep.violations)} stored)"
            print(
                f"[{status}] suite={rep.suite} n_max={rep.n_max}"
                f" checked={rep.checked} elapsed_ms={rep.elapsed_ms}"
            )
            for v in rep.violations[:10]:
                print(f"    {v['graph6']}: {v['detail']}")
            if len(rep.violations) > 10:
                print(f"    ... {len(rep.violations) - 10} more stored")
        failed |= not rep.passed
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interlacepoly",
        description="Exact interlace / circuit-partition polynomial toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="interlace polynomial of a graph")
    p.add_argument("input", help="graph file, or - for stdin")
    p.add_argument(
        "--format",
        choices=["edgelist", "graph6", "word"],
        default="edgelist",
        help="input format (default edgelist)",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("euler", help="Euler circuit analysis of a word")
    p.add_argument(
        "action", choices=["count", "partitions", "martin", "orbit"]
    )
    p.add_argument("input", help="double occurrence word file, or - for stdin")
    p.add_argument(
        "--format",
        choices=["edgelist", "graph6", "word"],
        default="word",
        help="input format (only word applies here)",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("enumerate", help="stream labeled graphs + polynomials")
    p.add_argument("n", type=int, help="graph order")
    p.add_argument("--connected", action="store_true", help="connected graphs only")
    p.add_argument(
        "--distinct",
        action="store_true",
        help="one line per distinct polynomial, with its count",
    )
    p.add_argument("--force", action="store_true", help="allow orders above 7")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["identities", "extremal", "conjectures"])
    p.add_argument("--n-max", type=int, default=6, help="graph order bound")
    p.add_argument(
        "--words-n-max",
        type=int,
        default=5,
        help="word-symbol bound for the orbit laws (identities suite)",
    )
    p.add_argument(
        "--samples",
        type=int,
        default=500,
        help="random word / random graph sample count",
    )
    p.add_argument("--seed", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
