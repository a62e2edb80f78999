"""
Main entry point for twistcheck
"""
import sys
import json
import logging
import argparse
import re
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from pydantic import ValidationError

from config.settings import settings
from src.utils.errors import UsageError
from src.utils.logging_config import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

# Flags whose values may start with a minus sign (-1/2, -1,2)
SIGNED_VALUE_FLAGS = ("--c", "--n", "--x")


def _attach_signed_values(argv):
    """Rewrite '--c -1/2' as '--c=-1/2' so argparse does not take the value for an option"""
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in SIGNED_VALUE_FLAGS and i + 1 < len(argv) and re.match(r"-\d", argv[i + 1]):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def _emit(value, args, extra: dict = None):
    """Print a computed value in the requested format"""
    from src.cli.render import element_to_json, render_element

    if args.format == "json":
        data = dict(extra or {})
        data["value"] = element_to_json(value)
        print(json.dumps(data, ensure_ascii=False))
    else:
        print(render_element(value))


def build_context(args):
    """TwistContext from --context or the --case/--n/--x/--order flags"""
    from src.models.context import TwistContext

    if args.context:
        ctx = TwistContext.parse(args.context)
        if args.order is not None:
            ctx = ctx.with_order(args.order)
        return ctx
    if not args.case or not args.n:
        raise UsageError("a context is required: give --case and --n (or --context)")
    fields = {"case": args.case, "n": args.n, "x": args.x}
    if args.order is not None:
        fields["order"] = args.order
    return TwistContext(**fields)


def cmd_bracket(args) -> int:
    """Commutator of two elements, which is the Lie bracket on generators"""
    from src.cli.expression import parse_element

    a, b = parse_element(args.left), parse_element(args.right)
    _emit(a * b - b * a, args, {"left": a.render(), "right": b.render()})
    return EXIT_OK


def cmd_nf(args) -> int:
    from src.cli.expression import parse_element

    _emit(parse_element(args.expr), args)
    return EXIT_OK


def _structure_map(args, twisted, printed) -> int:
    from src.cli.expression import parse_element, parse_generator

    ctx = build_context(args)
    if args.closed_form:
        value = printed(ctx, parse_generator(args.expr))
    else:
        value = twisted(ctx, parse_element(args.expr))
    _emit(value, args, {"context": ctx.to_dict(), "input": parse_element(args.expr).render()})
    return EXIT_OK


def cmd_delta(args) -> int:
    from src.quantum import cf_delta, twisted_delta
    return _structure_map(args, twisted_delta, cf_delta)


def cmd_antipode(args) -> int:
    from src.quantum import cf_antipode, twisted_antipode
    return _structure_map(args, twisted_antipode, cf_antipode)


def cmd_twist(args) -> int:
    from src.quantum import build_inverse_twist, build_twist, build_u, build_u_inv

    builders = {"twist": build_twist, "inverse": build_inverse_twist, "u": build_u, "u-inv": build_u_inv}
    ctx = build_context(args)
    value = builders[args.which](ctx, args.c)
    _emit(value, args, {"context": ctx.to_dict(), "which": args.which, "c": args.c})
    return EXIT_OK


def cmd_check(args) -> int:
    from src.storage.export import ResultExporter
    from src.verify import SUITES, SuiteRunner, get_grid

    grid = get_grid(args.grid, args.order)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    runner = SuiteRunner(grid, seed=args.seed, workers=args.workers)

    logger.info("=" * 60)
    logger.info(f"Running {len(names)} suite(s) on grid {grid.name}, order {grid.order}")
    logger.info("=" * 60)
    results, summary = runner.run_all(names)

    if args.format == "json":
        for result in results:
            print(json.dumps(result.to_dict(), ensure_ascii=False))
        print(json.dumps({"summary": summary.to_dict()}, ensure_ascii=False))
    else:
        print(ResultExporter.summary_table(results).to_string())
        for result in summary.discrepancies:
            print(f"paper-discrepancy  {result.item}: {result.detail}")
            if result.oracle:
                print(f"    oracle: {result.oracle}")
        for result in summary.failures:
            print(f"FAIL  {result.item}: {result.detail}")
        print(f"{summary.total} checks: " + ", ".join(f"{k}={v}" for k, v in summary.counts.items()))

    if args.output or settings.WRITE_RESULTS:
        exporter = ResultExporter(Path(args.output) if args.output else None)
        for path in exporter.export_all(results, summary):
            logger.info(f"Results written to {path}")
    return summary.exit_code


def _add_context_flags(p: argparse.ArgumentParser):
    p.add_argument("--case", choices=["g", "e", "d", "h", "f", "df"], help="Which (T, E) pair")
    p.add_argument("--n", help="Degree of E, as a,b")
    p.add_argument("--x", help="Coefficients of T = x1 d1 + x2 d2, as p,q (rationals)")
    p.add_argument("--context", help="Context string, e.g. 'case=g n=1,1 x=1,0 order=4'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="twistcheck - exact quantizations of the extended affine Lie algebra sl2(C_q)")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text", help="Output format")
    common.add_argument("--order", type=int, default=None, help="Truncation order N")

    bracket_parser = subparsers.add_parser("bracket", parents=[common], help="Bracket of two elements")
    bracket_parser.add_argument("left")
    bracket_parser.add_argument("right")

    nf_parser = subparsers.add_parser("nf", parents=[common], help="PBW normal form of an expression")
    nf_parser.add_argument("expr")

    for name, text in (("delta", "Twisted coproduct"), ("antipode", "Twisted antipode")):
        p = subparsers.add_parser(name, parents=[common], help=text)
        _add_context_flags(p)
        p.add_argument("--closed-form", action="store_true",
                       help="Evaluate the printed closed form instead of conjugating (single generators)")
        p.add_argument("expr")

    twist_parser = subparsers.add_parser("twist", parents=[common], help="Print a twist family element")
    _add_context_flags(twist_parser)
    twist_parser.add_argument("--c", default="0", help="Shift c (rational)")
    twist_parser.add_argument("--which", choices=["twist", "inverse", "u", "u-inv"], default="twist")

    check_parser = subparsers.add_parser("check", parents=[common], help="Run check suites")
    check_parser.add_argument("--suite", default="all", help="Suite name or 'all'")
    check_parser.add_argument("--grid", default=settings.DEFAULT_GRID, help="quick, default or full")
    check_parser.add_argument("--seed", type=int, default=settings.SEED, help="Seed for sampled checks")
    check_parser.add_argument("--workers", type=int, default=settings.WORKERS, help="Worker processes")
    check_parser.add_argument("--output", default=None, help="Directory for JSON lines / CSV results")
    return parser


COMMANDS = {
    "bracket": cmd_bracket,
    "nf": cmd_nf,
    "delta": cmd_delta,
    "antipode": cmd_antipode,
    "twist": cmd_twist,
    "check": cmd_check,
}


def main(argv=None) -> int:
    """Main CLI entry point"""
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_attach_signed_values(argv))

    setup_logging(level="DEBUG" if args.verbose else None)

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    try:
        return COMMANDS[args.command](args)
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        print(f"error: invalid parameters: {messages}", file=sys.stderr)
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
