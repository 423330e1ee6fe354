"""Command-line front end.

Subcommands: index, gen, check, verify, search, audit.  Exit code 0 means
no violations and no errors, 2 means an in-range verification found
violations, 1 means a usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import verify as verify_mod
from .errors import HamindexError
from .families import parse_spec
from .graphs import Graph, edge_list_decode, graph6_decode, graph6_encode
from .hamilton import DEFAULT_NODE_BUDGET, is_hamiltonian, is_traceable
from .metrics import check_fact_3_1, frac_str, wiener_and_harary
from .verify import TheoremId

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATIONS = 2


def _read_graphs(path: str) -> list[tuple[str, Graph]]:
    """Graphs from a file: either one graph6 string per line, or a single
    edge list whose first line is "n m"."""
    text = Path(path).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        return []
    head = lines[0].split()
    if len(head) == 2 and all(tok.isdigit() for tok in head):
        return [(f"{path}:1", edge_list_decode(text))]
    out = []
    for lineno, ln in enumerate(lines, start=1):
        try:
            out.append((f"{path}:{lineno}", graph6_decode(ln)))
        except HamindexError as exc:
            raise HamindexError(f"{path} line {lineno}: {exc}") from exc
    return out


def _emit(rows: list[dict], fmt: str, out: Optional[str]) -> None:
    if fmt == "json":
        text = json.dumps(rows, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        keys: list[str] = []
        for row in rows:
            for key in row:
                if key not in keys:
                    keys.append(key)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _plain(v) for k, v in row.items()})
        text = buf.getvalue()
    else:
        keys = []
        for row in rows:
            for key in row:
                if key not in keys:
                    keys.append(key)
        widths = {k: max(len(k), *(len(str(_plain(r.get(k, "")))) for r in rows))
                  for k in keys} if rows else {}
        header = "  ".join(k.ljust(widths[k]) for k in keys)
        lines = [header, "-" * len(header)]
        for row in rows:
            lines.append("  ".join(
                str(_plain(row.get(k, ""))).ljust(widths[k]) for k in keys))
        text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _plain(value):
    if isinstance(value, Fraction):
        return frac_str(value)
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return value


def cmd_index(args) -> int:
    rows = []
    for path in args.files:
        for name, g in _read_graphs(path):
            row = {"graph": name, "n": g.n, "e": g.edge_count(),
                   "min_degree": g.min_degree()}
            try:
                fact = check_fact_3_1(g)
                w, h = wiener_and_harary(g)
                row.update(diam=fact.diam, W=w, H=frac_str(h))
            except HamindexError:
                row.update(diam="undefined", W="undefined (disconnected)",
                           H="undefined (disconnected)")
            rows.append(row)
    _emit(rows, args.format, args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    rows = []
    for text in args.spec:
        spec = parse_spec(text)
        from .families import build
        g = build(spec)
        w_h: dict = {}
        try:
            w, h = wiener_and_harary(g)
            w_h = {"W": w, "H": frac_str(h)}
        except HamindexError:
            w_h = {"W": "undefined (disconnected)",
                   "H": "undefined (disconnected)"}
        rows.append({"spec": str(spec), "graph6": graph6_encode(g),
                     "n": g.n, "e": g.edge_count(),
                     "min_degree": g.min_degree(), **w_h})
    _emit(rows, args.format, args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    budget = args.budget or int(
        os.environ.get("HAMINDEX_BUDGET", DEFAULT_NODE_BUDGET))
    rows = []
    for path in args.files:
        for name, g in _read_graphs(path):
            ham = is_hamiltonian(g, node_budget=budget)
            trace = is_traceable(g, node_budget=budget)
            rows.append({
                "graph": name, "n": g.n, "e": g.edge_count(),
                "hamiltonian": ham.answer,
                "hamiltonian_certificate": ham.certificate.to_dict(),
                "traceable": trace.answer,
                "traceable_certificate": trace.certificate.to_dict(),
            })
    _emit(rows, args.format, args.out)
    return EXIT_OK


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def cmd_verify(args) -> int:
    theorem = TheoremId.parse(args.theorem)
    stmt = verify_mod.STATEMENTS[theorem]
    ns = _parse_range(args.n)
    if stmt.fixed_k is not None:
        ks = [stmt.fixed_k]
    elif args.k is not None:
        ks = _parse_range(args.k)
    elif stmt.kind == "fact":
        ks = [0]
    else:
        print("error: this statement needs --k", file=sys.stderr)
        return EXIT_USAGE
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    reports = []
    violations_in_range = 0
    for n in ns:
        for k in ks:
            if not args.exploratory and not stmt.in_range(n, k) \
                    and stmt.kind != "fact":
                print(f"skipping out-of-range (n={n}, k={k}); "
                      "pass --exploratory to run it", file=sys.stderr)
                continue
            stem = f"{theorem.value}_n{n}_k{k}.json"
            if out_dir and (out_dir / stem).exists():
                data = json.loads((out_dir / stem).read_text())
                reports.append(data)
                print(f"resume: reusing {stem}", file=sys.stderr)
                continue
            if stmt.kind == "edge":
                rep = verify_mod.verify_edge_lemma(
                    theorem, n, k, max_classes=args.max_classes)
            elif stmt.kind == "index":
                rep = verify_mod.verify_index_theorem(
                    theorem, n, k, max_classes=args.max_classes)
            else:
                rep = verify_mod.verify_fact(
                    theorem, n, max_classes=args.max_classes)
            data = rep.to_dict()
            reports.append(data)
            if out_dir:
                (out_dir / stem).write_text(
                    json.dumps(data, indent=2, sort_keys=True) + "\n")
            if rep.violations and not rep.exploratory:
                violations_in_range += len(rep.violations)
    summary = [{"theorem": r["theorem"], "n": r["n"], "k": r["k"],
                "branch": r.get("branch"), "exploratory": r["exploratory"],
                "enumerated": r["enumerated"],
                "hypothesis_hits": r["hypothesis_hits"],
                "conclusion_holds": r["conclusion_holds"],
                "exceptional": len(r["exceptional_matches"]),
                "violations": len(r["violations"])}
               for r in reports]
    if args.format == "json" and not out_dir:
        _emit(reports, "json", None)
    else:
        _emit(summary, args.format if args.format != "json" else "table",
              None)
    return EXIT_VIOLATIONS if violations_in_range else EXIT_OK


def cmd_search(args) -> int:
    result = verify_mod.extremal_search(args.problem, args.n, args.k,
                                        graph_class=args.graph_class)
    _emit([result.to_dict()], args.format, args.out)
    return EXIT_OK


def cmd_audit(args) -> int:
    report = verify_mod.audit_exceptional_sets()
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser, top: bool = False) -> None:
    # top-level carries the real defaults; subcommand copies use SUPPRESS so
    # they never clobber a value parsed before the subcommand
    p.add_argument("--format", choices=("json", "csv", "table"),
                   default="table" if top else argparse.SUPPRESS)
    p.add_argument("--jobs", type=int,
                   default=1 if top else argparse.SUPPRESS,
                   help="worker count for future parallel runs")
    p.add_argument("--out", default=None if top else argparse.SUPPRESS,
                   help="output file (verify: directory)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamindex",
        description="exact graph index toolkit and verification harness")
    _add_common(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="per-graph order, size, W, H")
    _add_common(p)
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("gen", help="construct family members")
    _add_common(p)
    p.add_argument("spec", nargs="+",
                   help='family specs like "N:n=9,k=2" or "G1:n=7,i=1"')
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="Hamiltonicity / traceability verdicts")
    _add_common(p)
    p.add_argument("files", nargs="+")
    p.add_argument("--budget", type=int, default=None,
                   help="search node budget (default HAMINDEX_BUDGET or 1e8)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run a statement over a scope")
    _add_common(p)
    p.add_argument("theorem")
    p.add_argument("--n", required=True, help="order or range A..B")
    p.add_argument("--k", default=None, help="degree bound or range C..D")
    p.add_argument("--exploratory", action="store_true",
                   help="also run outside the stated parameter range")
    p.add_argument("--max-classes", type=int,
                   default=verify_mod.DEFAULT_MAX_CLASSES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="extremal min-W / max-H search")
    _add_common(p)
    p.add_argument("problem", choices=verify_mod.PROBLEMS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--class", dest="graph_class",
                   choices=verify_mod.CLASSES, default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("audit", help="audit the exceptional sets and bounds")
    _add_common(p)
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except HamindexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
