"""Command-line interface.

Exit codes: 0 success, 2 input error, 3 invariant or verification failure,
4 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from importlib import resources
from pathlib import Path

from . import bounds as B
from .codes import (
    is_intersecting,
    min_distance,
    minimal_codewords,
    minimal_codewords_oracle,
    read_code,
)
from .cyclegraph import cycle_code, read_graph, verify_cycle_correspondence
from .errors import AcyclicGraph, BudgetExceeded, MincwError, ParseError, TooLarge
from .published import G_VALUES
from .search import (
    SearchBudget,
    compute_g,
    default_workers,
    exhaustive_max_M,
    heuristic_max_M,
    read_certificate,
    verify_certificate,
    write_certificate,
)

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT, EXIT_BUDGET = 0, 2, 3, 4

log = logging.getLogger("mincw")


class InputError(Exception):
    pass


def shipped_certificates():
    root = resources.files("mincw") / "data" / "certificates"
    for entry in sorted(root.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".cert"):
            yield read_certificate(Path(str(entry)))


def _bounds_for(n: int, k: int, g=B.EMBEDDED_G) -> dict[str, int | None]:
    out: dict[str, int | None] = {"trivial": B.trivial_upper(n, k)}
    if n in g:
        out["refined_trivial"] = B.refined_trivial_upper(n, k, g)
    out["matroid"] = B.matroid_upper(n, k)
    out["agrell"] = B.agrell_upper(n, k)
    out["recursion"] = B.recursion_upper_table(n, k, g)[(n, k)]
    return out


def cmd_analyze(args) -> int:
    try:
        code = read_code(args.code_file)
    except (OSError, ParseError) as exc:
        raise InputError(str(exc)) from exc
    mins = minimal_codewords(code)
    if args.oracle:
        oracle = minimal_codewords_oracle(code)
        if oracle.bitsets() != mins.bitsets():
            print(f"oracle mismatch: sieve {mins.count}, oracle {oracle.count}", file=sys.stderr)
            return EXIT_INVARIANT
    report = {
        "n": code.n,
        "k": code.k,
        "min_distance": min_distance(code),
        "M": mins.count,
        "intersecting": is_intersecting(code),
        "bounds": _bounds_for(code.n, code.k),
    }
    if args.oracle:
        report["oracle_agrees"] = True
    if args.minimal_list:
        report["minimal"] = [str(w) for w in mins]
    if args.json:
        print(json.dumps(report, sort_keys=True))
        return EXIT_OK
    print(f"code = [{code.n},{code.k}]")
    print(f"min_distance = {report['min_distance']}")
    print(f"M = {report['M']}")
    print(f"intersecting = {str(report['intersecting']).lower()}")
    for name, value in report["bounds"].items():
        print(f"{name} = {'n/a' if value is None else value}")
    if args.oracle:
        print("oracle = agrees")
    if args.minimal_list:
        print("# minimal codewords")
        for w in report["minimal"]:
            print(w)
    return EXIT_OK


def _read_d_table(path: str) -> dict[tuple[int, int], int]:
    out = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from exc
    for ln in text.splitlines():
        s = ln.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 3 or not all(p.isdigit() for p in parts):
            raise InputError(f"bad d-table line {s!r}, expected 'n k d'")
        n, k, d = map(int, parts)
        out[(n, k)] = d
    return out


def cmd_bounds(args) -> int:
    if not 1 <= args.N <= 64 or args.K < 1:
        raise InputError("need 1 <= N <= 64 and K >= 1")
    certs = [] if args.no_shipped else list(shipped_certificates())
    for path in args.search_lower:
        try:
            certs.append(read_certificate(path))
        except (OSError, ParseError) as exc:
            raise InputError(f"{path}: {exc}") from exc
    search = {}
    for c in certs:
        key = (c.n, c.k)
        search[key] = max(search.get(key, 0), c.claimed_m)
    d_table = _read_d_table(args.d_table) if args.d_table else {}
    cells = B.bounds_table(args.N, args.K, search_lower=search, d_table=d_table)
    if args.json:
        print(json.dumps([
            {"n": c.n, "k": c.k, "lower": c.lower, "lower_src": c.lower_src,
             "upper": c.upper, "upper_src": c.upper_src, "exact": c.exact}
            for c in cells
        ]))
    else:
        sys.stdout.write(B.format_table(cells))
    return EXIT_OK


def cmd_search(args) -> int:
    if not 1 <= args.k <= args.n <= 64:
        raise InputError("need 1 <= k <= n <= 64")
    budget = SearchBudget(
        max_candidates=args.max_candidates,
        max_time=args.max_time,
        workers=args.workers,
        restarts=args.restarts,
        seed=args.seed,
    )
    status = EXIT_OK
    if args.heuristic:
        cert = heuristic_max_M(args.n, args.k, budget)
    else:
        try:
            cert = exhaustive_max_M(args.n, args.k, budget, row_canonical=args.row_canonical)
        except BudgetExceeded as exc:
            cert = exc.partial
            status = EXIT_BUDGET
            print(f"budget exceeded: {exc}", file=sys.stderr)
    if args.out:
        write_certificate(cert, args.out)
    print(f"n k = {cert.n} {cert.k}")
    print(f"claimed_m = {cert.claimed_m}")
    print(f"method = {cert.method}")
    print(f"candidates_examined = {cert.candidates_examined}")
    log.info("wall time %.3fs", cert.wall_time)
    return status


def cmd_graph(args) -> int:
    try:
        g = read_graph(args.graph_file)
    except (OSError, ParseError) as exc:
        raise InputError(str(exc)) from exc
    try:
        report = verify_cycle_correspondence(g)
    except AcyclicGraph:
        print(f"p q = {g.p} {g.q}")
        print("acyclic: 0 cycles, no cycle code")
        return EXIT_OK
    except TooLarge as exc:
        raise InputError(str(exc)) from exc
    code = cycle_code(g)
    sign = "=" if report.agree else "!="
    print(f"cycles {report.cycles_via_code} {sign} {report.cycles_via_backtracking}, "
          f"code [{code.n},{code.k}]")
    if args.report:
        print(f"p q = {report.p} {report.q}")
        print(f"components = {report.components}")
        print(f"bound_new = {'n/a' if report.bound_new is None else report.bound_new}")
        print(f"bound_old = {'n/a' if report.bound_old is None else report.bound_old}")
        bounds = [b for b in (report.bound_new, report.bound_old) if b is not None]
        if bounds:
            print(f"bound_min = {min(bounds)}")
        print(f"agree = {str(report.agree).lower()}")
    if not report.agree:
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_gtable(args) -> int:
    budget = SearchBudget(max_time=args.max_time, workers=args.workers)
    status = EXIT_OK
    print("# n\tg\tsource\tembedded\tstatus")
    for n in range(3, args.N + 1):
        embedded = G_VALUES.get(n)
        if n <= args.compute_max:
            try:
                g = compute_g(n, budget)
                source = "computed"
            except BudgetExceeded as exc:
                g, source = exc.partial, "lower-estimate"
            if embedded is None:
                flag = "new"
            elif g == embedded:
                flag = "match"
            elif source == "lower-estimate" and g <= embedded:
                flag = "incomplete"
            else:
                flag = "MISMATCH"
                status = EXIT_INVARIANT
        else:
            if embedded is None:
                continue
            g, source, flag = embedded, "embedded", "embedded"
        print(f"{n}\t{g}\t{source}\t{embedded if embedded is not None else '-'}\t{flag}")
    return status


def cmd_verify(args) -> int:
    try:
        cert = read_certificate(args.cert_file)
    except (OSError, ParseError) as exc:
        raise InputError(str(exc)) from exc
    ok = verify_certificate(cert)
    print(f"({cert.n},{cert.k}) claimed_m {cert.claimed_m}: {'verified' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mincw", description="Minimal codewords of binary linear codes.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="M(C), distance and bounds for a code file")
    p.add_argument("code_file")
    p.add_argument("--oracle", action="store_true", help="cross-check with the pairwise oracle")
    p.add_argument("--minimal-list", action="store_true", help="list the minimal codewords")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", help="bounds table for n <= N, k <= K")
    p.add_argument("N", type=int)
    p.add_argument("K", type=int)
    p.add_argument("--search-lower", action="append", default=[], metavar="CERT",
                   help="extra certificate file (repeatable)")
    p.add_argument("--d-table", metavar="FILE", help="lines 'n k d' feeding the ABCH bound")
    p.add_argument("--no-shipped", action="store_true", help="ignore bundled certificates")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="search for a code maximising M")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", default=True)
    mode.add_argument("--heuristic", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=default_workers())
    p.add_argument("--max-candidates", type=int, default=10**15)
    p.add_argument("--max-time", type=float, default=float("inf"))
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--row-canonical", action="store_true",
                   help="also require sorted rows of A (smaller, still complete)")
    p.add_argument("--out", metavar="CERT")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("graph", help="cycle code of a graph file")
    p.add_argument("graph_file")
    p.add_argument("--report", action="store_true")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("gtable", help="recompute g(n) and compare with the published table")
    p.add_argument("N", type=int)
    p.add_argument("--compute-max", type=int, default=10)
    p.add_argument("--max-time", type=float, default=float("inf"))
    p.add_argument("--workers", type=int, default=default_workers())
    p.set_defaults(func=cmd_gtable)

    p = sub.add_parser("verify", help="re-check a search certificate")
    p.add_argument("cert_file")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MincwError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
