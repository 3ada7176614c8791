"""Command-line interface.

Polynomials on the command line are either coefficient lists, constant term
first ("1 1 0 -1", quote it or put -- before negative leading tokens), or
compact monomial syntax ("x^10-x^8-x^5+x+1").

Exit codes: 0 success, 1 domain errors (no root outside the unit disk, a
positive real root where none is allowed, malformed files or hex strings),
2 usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .certify import CertifyOptions, certify
from .feasibility import SolveOptions
from .listfile import ScanConfig, parse_list, run_scan
from .polynomial import IntPolynomial, NewmanPolynomial, parse_polynomial
from .roots import (
    BoundaryUndecided,
    NonConvergence,
    has_positive_real_root,
    mahler_measure,
)
from .search import SearchConfig, SearchStatus, find_newman_multiple

__all__ = ["main"]

_DOMAIN_ERRORS = (ValueError, ZeroDivisionError, NonConvergence, BoundaryUndecided, OSError)


def _poly_arg(tokens: Sequence[str]) -> IntPolynomial:
    return parse_polynomial(" ".join(tokens))


def _cmd_mahler(args: argparse.Namespace) -> int:
    p = _poly_arg(args.poly)
    result = mahler_measure(p)
    print(result.formatted(9))
    return 0


def _cmd_positive_root(args: argparse.Namespace) -> int:
    p = _poly_arg(args.poly)
    print("yes" if has_positive_real_root(p) else "no")
    return 0


def _solve_options(args: argparse.Namespace, high_first: bool) -> SolveOptions:
    opts = SolveOptions(branch_high_index_first=high_first)
    if getattr(args, "max_nodes", None):
        opts = SolveOptions(max_nodes=args.max_nodes, branch_high_index_first=high_first)
    return opts


def _cmd_find_multiple(args: argparse.Namespace) -> int:
    p = _poly_arg(args.poly)
    config = SearchConfig(
        max_total_degree=args.max_degree,
        power=args.power,
        binary_cofactor=args.binary,
        prefilter=args.prefilter,
        solve_options=_solve_options(args, high_first=args.binary),
    )
    result = find_newman_multiple(p, config)
    if result.status is SearchStatus.FOUND:
        print("status: found")
        print(f"total-degree: {result.total_degree}")
        print(f"product-hex: {result.product.to_hex()}")
        print(f"product: {result.product.to_polynomial().to_line()}")
        print(f"cofactor-degree: {result.cofactor.degree}")
        print(f"cofactor: {result.cofactor.to_line()}")
        return 0
    name = (
        "not-found"
        if result.status is SearchStatus.NOT_FOUND_UP_TO_DEGREE
        else "exhausted-with-unknowns"
    )
    print(f"status: {name}")
    print(f"frontier: {result.frontier}")
    unk = " ".join(str(d) for d in result.unknown_degrees) or "none"
    print(f"unknown-degrees: {unk}")
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    p = _poly_arg(args.poly)
    options = CertifyOptions(
        max_elements=args.cap,
        root_index=args.root_index,
        tolerance=args.tolerance,
    )
    cert = certify(p, options)
    block = cert.serialize()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(block)
        print(f"wrote certificate to {args.out}")
    else:
        sys.stdout.write(block)
    return 0


def _cmd_scan_list(args: argparse.Namespace) -> int:
    entries = parse_list(args.file, fmt=args.format)
    config = ScanConfig(
        max_total_degree=args.max_degree,
        out_dir=args.out_dir,
        jobs=args.jobs,
    )
    report = run_scan(entries, config)
    print(f"entries: {len(report.outcomes)}")
    print(f"newman: {report.newman}")
    print(f"positive: {report.positive}")
    print(f"found: {report.found}")
    print(f"unresolved: {report.unresolved}")
    print(f"output-dir: {args.out_dir}")
    return 0


def _cmd_power_table(args: argparse.Namespace) -> int:
    if args.min_deg > args.max_deg:
        print("error: --min-deg must not exceed --max-deg", file=sys.stderr)
        return 2
    p = _poly_arg(args.poly)
    config = SearchConfig(
        max_total_degree=args.max_deg,
        min_total_degree=args.min_deg,
        power=args.power,
        binary_cofactor=True,
        explore_all_degrees=True,
        prefilter=args.prefilter,
        solve_options=_solve_options(args, high_first=True),
    )
    result = find_newman_multiple(p, config)
    for degree in sorted(result.witnesses):
        w = result.witnesses[degree]
        if args.hex:
            print(f"{degree} {w.to_hex()}")
        else:
            print(f"{degree} {w.to_polynomial().to_line()}")
    if result.unknown_degrees:
        unk = " ".join(str(d) for d in result.unknown_degrees)
        print(f"# unresolved degrees: {unk}")
    return 0


def _cmd_encode(args: argparse.Namespace) -> int:
    p = _poly_arg(args.poly)
    print(NewmanPolynomial.from_polynomial(p).to_hex())
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    print(NewmanPolynomial.from_hex(args.hex).to_polynomial().to_line())
    return 0


def _add_poly_argument(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "poly",
        nargs="+",
        help="polynomial: coefficient list constant-first, or monomial syntax like x^10-x^8-x^5+x+1",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newmanpoly",
        description="Search for and certify Newman-polynomial multiples of integer polynomials.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("mahler", help="print the Mahler measure to 9 decimals")
    _add_poly_argument(s)
    s.set_defaults(func=_cmd_mahler)

    s = subs.add_parser("positive-root", help="report whether the polynomial has a positive real root")
    _add_poly_argument(s)
    s.set_defaults(func=_cmd_positive_root)

    s = subs.add_parser("find-multiple", help="search for a Newman multiple degree by degree")
    _add_poly_argument(s)
    s.add_argument("--max-degree", type=int, default=1000, metavar="D", help="largest product degree to try")
    s.add_argument("--power", type=int, default=1, metavar="K", help="search for a multiple of the K-th power")
    s.add_argument("--binary", action="store_true", help="solve for the multiple's 0/1 coefficients via remainder rows instead of for cofactor coefficients")
    s.add_argument("--prefilter", action="store_true", help="skip degrees excluded by value congruences at 2 and -2")
    s.add_argument("--max-nodes", type=int, default=None, metavar="N", help="search-tree node budget per degree")
    s.set_defaults(func=_cmd_find_multiple)

    s = subs.add_parser("certify", help="run the reachable-set certifier")
    _add_poly_argument(s)
    s.add_argument("--root-index", type=int, default=None, metavar="I", help="index into the root set instead of the default root outside the unit circle")
    s.add_argument("--cap", type=int, default=10_000_000, metavar="N", help="cap on stored reachable residues")
    s.add_argument("--tolerance", type=float, default=1e-12, help="outward slack on the disk-membership test")
    s.add_argument("--out", default=None, metavar="FILE", help="write the certificate block to FILE instead of stdout")
    s.set_defaults(func=_cmd_certify)

    s = subs.add_parser("scan-list", help="classify every entry of a candidate list file")
    s.add_argument("file", help="list file: 'degree measure coefficients' per line")
    s.add_argument("--format", choices=("A", "B"), default=None, help="A = half coefficients, B = full; default auto-detect")
    s.add_argument("--max-degree", type=int, default=1000, metavar="D", help="largest product degree per entry")
    s.add_argument("--jobs", type=int, default=None, metavar="J", help="worker processes (default: NEWMAN_JOBS or 1)")
    s.add_argument("--out-dir", default=".", metavar="DIR", help="directory for the six result files")
    s.set_defaults(func=_cmd_scan_list)

    s = subs.add_parser("power-table", help="tabulate Newman multiples of a power across a degree window")
    _add_poly_argument(s)
    s.add_argument("--power", type=int, required=True, metavar="K")
    s.add_argument("--min-deg", type=int, required=True, metavar="A")
    s.add_argument("--max-deg", type=int, required=True, metavar="B")
    s.add_argument("--hex", action="store_true", help="print witnesses in hexadecimal encoding")
    s.add_argument("--prefilter", action="store_true", help="skip degrees excluded by value congruences at 2 and -2")
    s.add_argument("--max-nodes", type=int, default=None, metavar="N", help="search-tree node budget per degree")
    s.set_defaults(func=_cmd_power_table)

    s = subs.add_parser("encode", help="hex-encode a Newman polynomial")
    _add_poly_argument(s)
    s.set_defaults(func=_cmd_encode)

    s = subs.add_parser("decode", help="decode a hex string into a coefficient line")
    s.add_argument("hex")
    s.set_defaults(func=_cmd_decode)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
