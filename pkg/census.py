#!/usr/bin/env python3
"""
Subgroup census command line.

Counts subgroups of groups given as expressions, enumerates the abelian
similarity classes and candidate orders for a given number of subgroups, and
re-verifies the classification tables and the sequence of class counts.

    census.py count "Q(8) x Z(5)"
    census.py lattice "SL(2,3)" --by-order
    census.py abelian-classes 12
    census.py bound "2^3*3"
    census.py candidates 19
    census.py verify tables
    census.py sequence

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 order cap or search window exceeded.
"""

import argparse
import sys
import typing

from subcensus import abelian, bounds, catalog, config, expr, lattice, similarity
from subcensus.errors import (
    InvalidGeneratorError,
    InvalidPresentationError,
    OrderCapError,
    SearchWindowError,
    VerificationError,
)
from subcensus.types import FactoredOrder

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

TABLE_K = 22


def _status(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def cmd_count(args: argparse.Namespace) -> int:
    print(lattice.count_subgroups(expr.build(args.expr)))
    return EXIT_OK


def cmd_lattice(args: argparse.Namespace) -> int:
    G = expr.build(args.expr)
    summary = lattice.summarize(G)
    print(f"{G.label}\torder {G.order}\t{summary.total} subgroups")
    if args.by_order:
        for order, count in summary.by_order.items():
            print(f"{order}\t{count}")
    for p, count in summary.sylow_counts.items():
        print(f"n_{p}\t{count}")
    return EXIT_OK


def cmd_abelian_classes(args: argparse.Namespace) -> int:
    classes = similarity.enumerate_abelian_classes(args.k)
    for c in classes:
        print(similarity.render_class(c))
    print(len(classes))
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    report = bounds.applicable_bound(FactoredOrder.parse(args.order))
    print(f"{report.bound}\t{report.theorem}")
    return EXIT_OK


def cmd_candidates(args: argparse.Namespace) -> int:
    for report in bounds.candidate_orders(args.K):
        print(report.render())
    return EXIT_OK


def cmd_classes_table(args: argparse.Namespace) -> int:
    if not 1 <= args.K <= TABLE_K:
        raise SearchWindowError(args.K, TABLE_K, "table size")
    for k, rendered in similarity.class_table(args.K):
        print(f"{k}\t{len(rendered)}\t{'; '.join(rendered)}")
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.k is not None and not 1 <= args.k <= catalog.MAX_K:
        raise SearchWindowError(args.k, catalog.MAX_K, "subgroup count")
    for e in catalog.catalog_entries():
        if args.k is None or e.k == args.k:
            print(f"{e.k}\t{e.name}\t{catalog.render_entry(e)}\t{e.notes}".rstrip("\t"))
    return EXIT_OK


def cmd_sequence(args: argparse.Namespace) -> int:
    print(", ".join(map(str, catalog.sequence_terms(args.K))))
    return EXIT_OK


def _verify_abelian_table(lines: typing.List[str]) -> bool:
    ok = True
    for k in range(1, TABLE_K + 1):
        classes = similarity.enumerate_abelian_classes(k)
        for c in classes:
            report = similarity.verify_class(k, c)
            lines.append(report.line())
            ok &= report.passed
        published = similarity.PUBLISHED_CLASS_COUNTS[k - 1]
        passed = len(classes) == published
        lines.append(f"abelian classes k={k}\t{published}\t{len(classes)}\t{_status(passed)}")
        ok &= passed
    return ok


def _verify_catalog(lines: typing.List[str]) -> typing.Tuple[bool, list]:
    reports = catalog.verify_catalog()
    ok = True
    for report in reports:
        lines.append(report.line())
        ok &= report.passed
    for k, published in catalog.PUBLISHED_NONABELIAN_COUNTS.items():
        observed = catalog.nonabelian_class_count(k)
        passed = observed == published
        lines.append(f"non-abelian classes k={k}\t{published}\t{observed}\t{_status(passed)}")
        ok &= passed
    return ok, reports


def _verify_invariants(lines: typing.List[str]) -> bool:
    ok = True
    for e in catalog.catalog_entries():
        violations = [v for found in catalog.entry_invariants(e).values() for v in found]
        lines.append(f"invariants {e.name}\t{len(violations)}\t{_status(not violations)}")
        lines.extend(f"  {v}" for v in violations)
        ok &= not violations
    for p, a in ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)):
        shape_count = abelian.count_p_component(p, (a - 1, 1))
        least = abelian.min_noncyclic_pgroup_count(p, a)
        passed = shape_count >= least
        lines.append(f"p-group bound p={p} a={a}\t{least}\t{shape_count}\t{_status(passed)}")
        ok &= passed
    return ok


def _verify_completeness(lines: typing.List[str]) -> bool:
    report = catalog.completeness_check_small_orders()
    for row in report.rows:
        lines.append(f"order {row.order} {row.label}\t{row.subgroups}\t{row.similarity}\t{_status(row.covered)}")
    return not report.gaps


def cmd_verify(args: argparse.Namespace) -> int:
    lines: typing.List[str] = []
    ok = _verify_abelian_table(lines)
    catalog_ok, reports = _verify_catalog(lines)
    ok &= catalog_ok
    ok &= _verify_invariants(lines)
    ok &= _verify_completeness(lines)
    if catalog_ok:
        terms = catalog.sequence_terms(reports=reports)
        passed = tuple(terms) == catalog.PUBLISHED_SEQUENCE
        lines.append(f"sequence\t{', '.join(map(str, catalog.PUBLISHED_SEQUENCE))}\t{', '.join(map(str, terms))}\t{_status(passed)}")
        ok &= passed
    else:
        lines.append("sequence\t-\t-\tFAIL")
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="census.py",
        description="Exact subgroup counts of small finite groups",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--max-order", type=int, default=None, help="Order cap for constructed groups")
    parser.add_argument("--workers", type=int, default=None, help="Processes used for catalog verification")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_count = subparsers.add_parser("count", help="Number of subgroups of a group expression")
    p_count.add_argument("expr", help='Group expression, e.g. "Z(9) x Z(3)"')
    p_count.set_defaults(handler=cmd_count)

    p_lattice = subparsers.add_parser("lattice", help="Subgroup lattice summary")
    p_lattice.add_argument("expr")
    p_lattice.add_argument("--by-order", action="store_true", help="Print the number of subgroups of each order")
    p_lattice.set_defaults(handler=cmd_lattice)

    p_classes = subparsers.add_parser("abelian-classes", help="Abelian similarity classes with exactly k subgroups")
    p_classes.add_argument("k", type=int)
    p_classes.set_defaults(handler=cmd_abelian_classes)

    p_bound = subparsers.add_parser("bound", help="Lower bound on the number of subgroups for an order")
    p_bound.add_argument("order", help="Factored order, e.g. 2^3*3")
    p_bound.set_defaults(handler=cmd_bound)

    p_candidates = subparsers.add_parser("candidates", help="Orders left open by the bounds for at most K subgroups")
    p_candidates.add_argument("K", type=int)
    p_candidates.set_defaults(handler=cmd_candidates)

    p_verify = subparsers.add_parser("verify", help="Re-verify the classification tables")
    p_verify.add_argument("what", choices=["tables"])
    p_verify.set_defaults(handler=cmd_verify)

    p_sequence = subparsers.add_parser("sequence", help="Number of similarity classes with k subgroups, k = 1..K")
    p_sequence.add_argument("K", type=int, nargs="?", default=catalog.MAX_K)
    p_sequence.set_defaults(handler=cmd_sequence)

    p_table = subparsers.add_parser("classes-table", help="Abelian similarity classes for k = 1..K")
    p_table.add_argument("K", type=int, nargs="?", default=TABLE_K)
    p_table.set_defaults(handler=cmd_classes_table)

    p_catalog = subparsers.add_parser("catalog", help="Non-abelian catalog entries")
    p_catalog.add_argument("k", type=int, nargs="?", default=None)
    p_catalog.set_defaults(handler=cmd_catalog)

    return parser


def run(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    overrides = {}
    if args.max_order is not None:
        overrides["max_order"] = args.max_order
    if args.workers is not None:
        overrides["workers"] = args.workers
    if overrides:
        config.configure(**overrides)
    config.setup_logging()
    return args.handler(args)


def main(argv: typing.Optional[typing.Sequence[str]] = None):
    """Main entry point"""
    try:
        code = run(argv)
    except KeyboardInterrupt:
        print("\nInterrupted.", file=sys.stderr)
        sys.exit(EXIT_OK)
    except VerificationError as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(EXIT_FAILED)
    except (OrderCapError, SearchWindowError) as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(EXIT_CAP)
    except (ValueError, InvalidPresentationError, InvalidGeneratorError) as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(EXIT_USAGE)
    except Exception as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(EXIT_FAILED)
    sys.exit(code)


if __name__ == "__main__":
    main()
