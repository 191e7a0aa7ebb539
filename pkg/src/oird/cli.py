"""Command-line entry point: ``oird solve|verify|product|family|check|gen``.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success, 1 invalid
certificate or failed sweep, 2 usage or input error, 3 refused for size.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .clawfree import FamilyDescriptor, check_lower_bound, find_spine_partition, make_family
from .graph import (GRAPH_CLASSES, Graph, GraphFormatError, from_graph6, generate,
                    is_claw_free, is_connected, read_graph6_lines)
from .harness import THEOREMS, Budget, default_workers, run_theorem
from .products import (RootedSpec, cartesian, cartesian_bound_and_certificate, corona,
                       corona_certificate, corona_formula, direct, direct_bound_and_certificate,
                       rooted, rooted_certificate, rooted_predict)
from .rainbow import (SOLVER_METHODS, Certificate, OrderTooLarge, RainbowAssignment, solve_exact,
                      verify)

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_REFUSED = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise InputError(f"{path} is not UTF-8 text") from exc


def _read_graph(path: str) -> Graph:
    lines = [ln.strip() for ln in _read_text(path).splitlines() if ln.strip()]
    if not lines:
        raise InputError(f"{path}: no graph6 line found")
    if len(lines) > 1 and not (len(lines) == 2 and lines[0].startswith(">>graph6<<")):
        raise InputError(f"{path}: expected one graph, found {len(lines)} lines "
                         "(use check --corpus for batches)")
    try:
        return from_graph6(lines[-1] if len(lines) == 2 else lines[0])
    except GraphFormatError as exc:
        raise InputError(f"{path}: malformed graph6: {exc}") from exc


def _read_certificate(path: str) -> dict:
    text = _read_text(path)
    start = text.find("{")
    if start < 0:
        raise InputError(f"{path}: no certificate JSON object found")
    try:
        data, _ = json.JSONDecoder().raw_decode(text[start:])
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed certificate JSON: {exc}") from exc
    return data


def _emit_certificate(cert: Certificate) -> None:
    print(cert.to_json())


def cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    value, cert = solve_exact(g, args.method)
    print(value)
    if args.bound:
        if g.n and is_connected(g) and is_claw_free(g):
            print(f"claw-free lower bound {check_lower_bound(g, value).bound}")
        else:
            print("claw-free lower bound n/a", file=sys.stderr)
    _emit_certificate(cert)
    return EXIT_OK


def cmd_verify(args) -> int:
    data = _read_certificate(args.certificate)
    try:
        missing = [k for k in ("graph6", "k", "labels", "weight") if k not in data]
        if missing:
            raise ValueError(f"missing keys {missing}")
        g = from_graph6(data["graph6"])
        f = RainbowAssignment.from_sets(data["labels"], int(data["k"]))
        stated = int(data["weight"])
        verdict = verify(g, f)
    except (TypeError, ValueError) as exc:
        raise InputError(f"certificate rejected: {exc}") from exc
    problems = [str(v) for v in verdict.violations]
    if stated != f.weight:
        problems.append(f"stated weight {stated} but the labels weigh {f.weight}")
    if args.graph is not None and _read_graph(args.graph) != g:
        problems.append("certificate graph differs from the supplied graph")
    if not problems:
        print(f"valid weight {f.weight}")
        return EXIT_OK
    print("invalid")
    for line in problems:
        print(f"  {line}")
    return EXIT_INVALID


def cmd_product(args) -> int:
    g, h = _read_graph(args.g), _read_graph(args.h)
    kind = args.kind
    if kind == "rooted":
        if args.root is None:
            raise InputError("--root is required for a rooted product")
        try:
            spec = RootedSpec(g, h, args.root)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        prod, _ = rooted(spec)
        print(prod.to_graph6())
        if args.construct:
            pred, cert = rooted_certificate(spec)
            print(f"predicted {pred.value} ({pred.case})")
            _emit_certificate(cert)
        else:
            pred = rooted_predict(spec)
            print(f"predicted {pred.value} ({pred.case})")
        return EXIT_OK
    if args.root is not None:
        raise InputError("--root only applies to rooted products")
    if kind == "direct":
        prod, _ = direct(g, h)
        print(prod.to_graph6())
        bound, cert = direct_bound_and_certificate(g, h)
        print(f"upper bound {bound}")
    elif kind == "cartesian":
        prod, _ = cartesian(g, h)
        print(prod.to_graph6())
        bound, cert = cartesian_bound_and_certificate(g, h)
        print(f"upper bound {bound}")
    else:
        prod, _ = corona(g, h)
        print(prod.to_graph6())
        print(f"exact {corona_formula(g, h)}")
        cert = corona_certificate(g, h)
    if args.construct:
        _emit_certificate(cert)
    return EXIT_OK


def cmd_family(args) -> int:
    if args.make is not None:
        try:
            d = FamilyDescriptor.parse(args.make)
        except ValueError as exc:
            raise InputError(f"bad descriptor {args.make!r}: {exc}") from exc
        print(make_family(d).to_graph6())
        return EXIT_OK
    g = _read_graph(args.recognize)
    part = find_spine_partition(g)
    if part is None:
        print("none")
        return EXIT_OK
    print(part.descriptor)
    print(f"spine {' '.join(map(str, part.spine))}")
    print(f"pendants {' '.join(map(str, part.pendants))}")
    return EXIT_OK


def cmd_check(args) -> int:
    corpus = None
    if args.corpus is not None:
        try:
            corpus = list(read_graph6_lines(_read_text(args.corpus).splitlines()))
        except GraphFormatError as exc:
            raise InputError(f"{args.corpus}: malformed graph6: {exc}") from exc
    elif args.max_n > 7:
        raise OrderTooLarge("built-in enumeration stops at n = 7; pass --corpus for larger graphs")
    workers = args.workers if args.workers is not None else default_workers()
    if os.environ.get("OIRD_THREADS"):
        workers = min(workers, default_workers())
    budget = Budget(max_n=args.max_n, max_instances=args.max_instances, seconds=args.seconds,
                    seed=args.seed, workers=workers, corpus=corpus)
    report = run_theorem(args.theorem, budget)
    print(report.to_json() if args.json else report.table())
    if report.failures:
        return EXIT_INVALID
    if not report.complete:
        print("sweep stopped at its budget; report is partial", file=sys.stderr)
        return EXIT_REFUSED
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        g = generate(args.graph_class, args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print(g.to_graph6())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oird", description="Outer-independent 2-rainbow domination toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="exact value and certificate for one graph6 graph")
    s.add_argument("graph", nargs="?", default="-", help="graph6 file, '-' for stdin")
    s.add_argument("--bound", action="store_true", help="also print the n/2 claw-free bound")
    s.add_argument("--method", choices=SOLVER_METHODS, default="auto",
                   help="exact method: branch and bound, frontier dynamic program, or auto")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check a certificate; exit 0 iff valid")
    s.add_argument("certificate", nargs="?", default="-", help="certificate JSON file, '-' for stdin")
    s.add_argument("--graph", help="graph6 file the certificate must match")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("product", help="build a graph product and its value")
    s.add_argument("--kind", required=True, choices=("cartesian", "direct", "rooted", "corona"))
    s.add_argument("--g", required=True, help="graph6 file of the base factor")
    s.add_argument("--h", required=True, help="graph6 file of the second factor / fiber")
    s.add_argument("--root", type=int, help="root vertex of the fiber (rooted only)")
    s.add_argument("--construct", action="store_true", help="emit a certificate JSON")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("family", help="build or recognise members of the extremal family")
    grp = s.add_mutually_exclusive_group(required=True)
    grp.add_argument("--make", metavar="DESC", help='descriptor such as "g1:2,3,1", "g2:4", "g3:6"')
    grp.add_argument("--recognize", metavar="FILE", help="graph6 file to recognise")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("check", help="run a verification sweep")
    s.add_argument("--theorem", required=True, choices=THEOREMS)
    s.add_argument("--corpus", metavar="FILE", help="graph6 corpus, one graph per line")
    s.add_argument("--max-n", type=int, default=7)
    s.add_argument("--max-instances", type=int)
    s.add_argument("--seconds", type=float)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int)
    s.add_argument("--json", action="store_true", help="JSON report instead of a table")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("gen", help="print a graph of a standard class as graph6")
    s.add_argument("--class", dest="graph_class", required=True, choices=GRAPH_CLASSES)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_gen)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OrderTooLarge as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
