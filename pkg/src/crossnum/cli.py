"""Command-line interface: ``crossnum gen|solve|verify|audit|oracle|table``.

Exit codes: 0 success, 1 a property is violated (invalid certificate, failed
audit), 2 usage or input error, 3 timeout or inconclusive search.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .audit import AuditError, audit_all
from .drawing import CertificateFormatError, DrawingCertificate, validate_certificate
from .graph import DegenerateParameters, Graph, GraphFormatError, build_gp, is_p103
from .solver import OracleTooLarge, SearchBudget, brute_force_oracle, crossing_number

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_graph(path: str) -> Graph:
    return Graph.from_text(Path(path).read_text())


def _read_cert(path: str) -> DrawingCertificate:
    return DrawingCertificate.from_text(Path(path).read_text())


def _budget(args) -> SearchBudget:
    workers = 1 if args.deterministic else (args.workers or os.cpu_count() or 1)
    return SearchBudget(max_seconds=args.budget_secs, workers=workers)


def cmd_gen(args) -> int:
    n, k = args.gp
    try:
        g = build_gp((n, k))
    except (DegenerateParameters, ValueError) as exc:
        _err(str(exc))
        return EXIT_USAGE
    text = g.to_text()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_solve(args) -> int:
    try:
        g = _read_graph(args.graph)
    except (OSError, GraphFormatError) as exc:
        _err(f"cannot read graph: {exc}")
        return EXIT_USAGE
    if not g.is_connected():
        _err("graph must be connected")
        return EXIT_USAGE
    res = crossing_number(g, _budget(args), symmetry=not args.no_symmetry, max_k=args.max_k)
    st = res.stats
    if res.value is None:
        print(f"cr >= {res.refutation_k + 1} (search stopped: {'timeout' if res.timed_out else 'max-k reached'})")
        print(f"nodes = {st.nodes}, planarity calls = {st.planarity_calls}, seconds = {st.seconds:.2f}")
        return EXIT_TIMEOUT
    out = Path(args.cert) if args.cert else Path(args.graph).with_suffix(".cert")
    out.write_text(res.certificate.to_text())
    print(f"cr = {res.value}")
    print(f"certificate written to {out}")
    print(f"nodes = {st.nodes}, planarity calls = {st.planarity_calls}, seconds = {st.seconds:.2f}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        cert = _read_cert(args.cert)
    except (OSError, CertificateFormatError, GraphFormatError) as exc:
        _err(f"cannot read certificate: {exc}")
        return EXIT_USAGE
    problems = validate_certificate(cert)
    if problems:
        print("invalid")
        for p in problems:
            print(f"  {p}")
        return EXIT_VIOLATION
    print(f"valid, nu(D) = {cert.crossing_count}")
    return EXIT_OK


def cmd_audit(args) -> int:
    try:
        cert = _read_cert(args.cert)
    except (OSError, CertificateFormatError, GraphFormatError) as exc:
        _err(f"cannot read certificate: {exc}")
        return EXIT_USAGE
    if not is_p103(cert.base):
        _err("audit is defined for P(10,3) under the canonical labelling only")
        return EXIT_USAGE
    try:
        report = audit_all(cert)
    except AuditError as exc:
        _err(str(exc))
        return EXIT_VIOLATION
    sys.stdout.write(report.to_text())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_oracle(args) -> int:
    try:
        g = _read_graph(args.graph)
    except (OSError, GraphFormatError) as exc:
        _err(f"cannot read graph: {exc}")
        return EXIT_USAGE
    try:
        value = brute_force_oracle(g, args.max_k)
    except OracleTooLarge as exc:
        _err(str(exc))
        return EXIT_USAGE
    print(f"cr = {value}" if value is not None else f"cr > {args.max_k}")
    return EXIT_OK


def cmd_table(args) -> int:
    n_lo, n_hi = args.n
    k_lo, k_hi = args.k
    if n_lo > n_hi or k_lo > k_hi:
        _err("empty range")
        return EXIT_USAGE
    budget = _budget(args)
    rows = []
    for n in range(n_lo, n_hi + 1):
        for k in range(k_lo, k_hi + 1):
            try:
                g = build_gp((n, k))
            except ValueError:
                continue
            res = crossing_number(g, budget)
            rows.append((n, k, "timeout" if res.value is None else str(res.value)))
    print(f"{'n':>3} {'k':>3} {'cr':>8}")
    for n, k, v in rows:
        print(f"{n:>3} {k:>3} {v:>8}")
    return EXIT_OK


def _search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-secs", type=float, default=4 * 3600.0, help="wall-clock budget (default 4 hours)")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default: all cores)")
    p.add_argument("--deterministic", action="store_true", help="single worker, canonical expansion order")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="crossnum", description="Exact crossing numbers with verifiable drawing certificates.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a generalized Petersen graph")
    p.add_argument("--gp", nargs=2, type=int, metavar=("N", "K"), required=True)
    p.add_argument("--out", help="output path (default: standard output)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="exact crossing number of a graph file")
    p.add_argument("graph")
    p.add_argument("--max-k", type=int, default=None, help="give up after refuting this many crossings")
    p.add_argument("--cert", help="certificate output path (default: graph path with .cert)")
    p.add_argument("--no-symmetry", action="store_true", help="disable automorphism pruning")
    _search_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a drawing certificate")
    p.add_argument("cert")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", help="run the P(10,3) lower-bound checks on a certificate")
    p.add_argument("cert")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("oracle", help="brute-force crossing number up to a bound")
    p.add_argument("graph")
    p.add_argument("--max-k", type=int, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("table", help="crossing numbers of P(n,k) over ranges")
    p.add_argument("--n", nargs=2, type=int, metavar=("LO", "HI"), required=True)
    p.add_argument("--k", nargs=2, type=int, metavar=("LO", "HI"), required=True)
    _search_flags(p)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", None) is not None and args.workers <= 0:
        _err("--workers must be positive")
        return EXIT_USAGE
    if getattr(args, "budget_secs", 1.0) <= 0:
        _err("--budget-secs must be positive")
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
