"""
distres Command Line

Subcommands for distance partitions, residuals, products, catalog graphs,
symmetry checks, theorem verification and isomorphism tests.

Stdout carries only deterministic command output; logs go to stderr.
Exit codes: 0 success, 1 domain error (or a negative iso/verify result),
2 usage error.
"""
import argparse
import logging
import sys
from typing import List, Optional

from app.utils.config import config
from app.utils.log import setup_logging
from app.graphs.catalog import list_entries, named
from app.graphs.core import is_edge_transitive, is_semisymmetric, is_vertex_transitive
from app.graphs.export import PartitionReport, VerifyReport, to_dot
from app.graphs.graph6 import read_graph6_file, serialize_graph6, write_graph6_file
from app.graphs.isomorphism import find_isomorphism
from app.graphs.metrics import distance_partition, is_growth_regular, residual
from app.graphs.products import product
from app.graphs.types import DistresError, ProductKind, TheoremId
from app.graphs.verification import verify

logger = logging.getLogger(__name__)

PROPERTIES = {
    "vt": is_vertex_transitive,
    "et": is_edge_transitive,
    "semisym": is_semisymmetric,
    "growth-regular": is_growth_regular,
}


def _id_list(text: str) -> List[int]:
    try:
        ids = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}")
    if not ids:
        raise argparse.ArgumentTypeError("empty vertex list")
    return ids


def _ids(values) -> str:
    return " ".join(str(v) for v in values)


def cmd_partition(args) -> int:
    """Distance partition of --in from --root"""
    G = read_graph6_file(args.input)
    partition = distance_partition(G, args.root)
    if args.json:
        print(PartitionReport.build(partition, residual(G, args.root)).model_dump_json())
        return 0
    for i, cls in enumerate(partition.classes):
        print(f"V_{i}: {_ids(cls)}")
    return 0


def cmd_residual(args) -> int:
    """Residual graph and d_R"""
    G = read_graph6_file(args.input)
    result = residual(G, args.root)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as f:
            f.write(to_dot(G, highlight=result.origin))
        logger.info("Wrote DOT to %s", args.dot)
    if args.json:
        print(PartitionReport.build(distance_partition(G, args.root), result).model_dump_json())
        return 0
    print(f"d_R: {result.d_R}")
    print(f"vertices: {_ids(result.origin)}")
    print(f"residual: {serialize_graph6(result.residual)}")
    return 0


def cmd_sequence(args) -> int:
    """Distance sequence"""
    G = read_graph6_file(args.input)
    print(_ids(distance_partition(G, args.root).sequence().counts))
    return 0


def cmd_product(args) -> int:
    """Product of two graph6 files"""
    result = product(ProductKind.parse(args.kind), read_graph6_file(args.left), read_graph6_file(args.right))
    if args.out:
        write_graph6_file(args.out, result)
        logger.info("Wrote %s product (n=%d) to %s", args.kind, result.n, args.out)
    else:
        print(serialize_graph6(result))
    return 0


def cmd_catalog(args) -> int:
    """List catalog families or generate one"""
    if args.action == "list":
        for e in list_entries():
            degree = "-" if e.expected_degree is None else e.expected_degree
            params = ",".join(str(p) for p in e.params) or "-"
            print(f"{e.name}\tparams={params}\torder={e.expected_order}\tdegree={degree}")
        return 0

    G = named(args.name, args.params)
    if args.out:
        write_graph6_file(args.out, G)
        logger.info("Wrote %s (n=%d) to %s", args.name, G.n, args.out)
    else:
        print(serialize_graph6(G))
    return 0


def cmd_check(args) -> int:
    """Symmetry / growth property"""
    G = read_graph6_file(args.graph)
    value = PROPERTIES[args.prop](G)
    print(f"{args.prop}: {str(value).lower()}")
    return 0


def cmd_verify(args) -> int:
    """Randomized theorem verification; exit 1 when any trial fails"""
    report = verify(
        TheoremId(args.theorem),
        trials=args.trials,
        max_n=args.max_n,
        seed=args.seed,
        jobs=args.jobs,
        progress=args.progress or config.DISTRES_PROGRESS,
    )
    if args.json:
        print(VerifyReport.build(report).model_dump_json())
    else:
        print(f"theorem: {report.theorem.value}")
        print(f"trials: {report.trials}  seed: {report.seed}  max_n: {report.max_n}")
        print("cases: " + ", ".join(f"{case}={count}" for case, count in sorted(report.case_counts.items())))
        print(f"failures: {len(report.failures)}")
        for failure in report.failures:
            print(f"  trial {failure.trial} [{failure.case}] {failure.detail}")
            print(f"    factors: {'; '.join(failure.factors)}")
            print(f"    expected: {failure.expected_g6}  actual: {failure.actual_g6}")
    return 0 if report.passed else 1


def cmd_iso(args) -> int:
    """Isomorphism test; exit 1 when not isomorphic"""
    mapping = find_isomorphism(read_graph6_file(args.left), read_graph6_file(args.right))
    if mapping is None:
        print("not isomorphic")
        return 1
    print("isomorphic")
    print(_ids(mapping))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distres",
        description="Distance-residual graphs and graph product theorems",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Residual of the Petersen graph from one vertex
  distres catalog gen petersen --out petersen.g6
  distres residual --in petersen.g6 --root 0 --dot petersen.dot

  # Strong product of two graph6 files
  distres product --kind strong a.g6 b.g6 --out ab.g6

  # Verify the lexicographic residual theorem
  distres verify --theorem lexicographic --trials 1000 --max-n 8 --seed 42 --jobs 4
        """
    )
    parser.add_argument('--verbose', '-v', action='store_true',
                        help='Debug logging on stderr')
    sub = parser.add_subparsers(dest="command", required=True)

    for name, handler, help_text in (
        ("partition", cmd_partition, "Distance partition from a root"),
        ("residual", cmd_residual, "Residual graph from a root"),
        ("sequence", cmd_sequence, "Distance sequence from a root"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('--in', dest="input", required=True, help='graph6 file')
        p.add_argument('--root', type=_id_list, required=True, help='Comma-separated root vertex ids')
        if name != "sequence":
            p.add_argument('--json', action='store_true', help='JSON output')
        if name == "residual":
            p.add_argument('--dot', help='Write DOT with the residual highlighted')
        p.set_defaults(handler=handler)

    p = sub.add_parser("product", help="Graph product")
    p.add_argument('--kind', required=True, choices=["cartesian", "strong", "lex", "lexicographic", "direct"])
    p.add_argument('left', help='First (outer) factor, graph6')
    p.add_argument('right', help='Second factor, graph6')
    p.add_argument('--out', help='Output graph6 file (default: stdout)')
    p.set_defaults(handler=cmd_product)

    p = sub.add_parser("catalog", help="Named graphs")
    p.add_argument('action', choices=["list", "gen"])
    p.add_argument('name', nargs="?", help='Family name (gen)')
    p.add_argument('params', nargs="*", type=int, help='Integer parameters (gen)')
    p.add_argument('--out', help='Output graph6 file (default: stdout)')
    p.set_defaults(handler=cmd_catalog)

    p = sub.add_parser("check", help="Symmetry and growth properties")
    p.add_argument('--graph', required=True, help='graph6 file')
    p.add_argument('--prop', required=True, choices=sorted(PROPERTIES))
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("verify", help="Randomized theorem verification")
    p.add_argument('--theorem', required=True, choices=[t.value for t in TheoremId])
    p.add_argument('--trials', type=int, default=100)
    p.add_argument('--max-n', type=int, default=8)
    p.add_argument('--seed', type=int, default=config.DISTRES_SEED,
                   help=f'64-bit seed (default: {config.DISTRES_SEED})')
    p.add_argument('--jobs', type=int, default=config.DISTRES_JOBS,
                   help=f'Worker processes (default: {config.DISTRES_JOBS})')
    p.add_argument('--progress', action='store_true', help='Progress bar on stderr')
    p.add_argument('--json', action='store_true', help='JSON output')
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("iso", help="Isomorphism test")
    p.add_argument('left', help='graph6 file')
    p.add_argument('right', help='graph6 file')
    p.set_defaults(handler=cmd_iso)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "catalog" and args.action == "gen" and not args.name:
        parser.error("catalog gen needs a graph name")
    setup_logging("DEBUG" if args.verbose else config.LOG_LEVEL, config.LOG_FILE)

    try:
        return args.handler(args)
    except (DistresError, OSError) as e:
        logger.debug("Command %s failed", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
