#!/usr/bin/env python3
"""
Startup script for the preprojective toolkit
"""
import sys
import argparse
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from pydantic import ValidationError

from src.main import EXIT_USAGE, cmd_graph, cmd_multiseg, cmd_roots, cmd_shuffle, export_format
from src.models import RunConfig
from src.utils.logger import setup_logging, console
from src.config import config


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--seed", type=int, default=config.SEED, help=f"Random seed (default: {config.SEED})")
    parser.add_argument("--trials", type=int, default=config.TRIALS,
                        help=f"Random samples per generic computation (default: {config.TRIALS})")
    parser.add_argument("--fixtures", type=str, default=None, help="Override the fixture directory")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")


def parse_arguments(argv=None):
    """Parse command line arguments"""
    parser = argparse.ArgumentParser(
        description="Preprojective toolkit - modules, root systems, component graphs and shuffle algebras"
    )
    commands = parser.add_subparsers(dest="subcommand", required=True)

    roots = commands.add_parser("roots", help="Root system of the n = 5 preprojective algebra")
    _common(roots)
    roots.add_argument("action", choices=["verify-coxeter", "pairings", "count", "classify",
                                          "schur-per-slope", "verify-delta", "e8"])
    roots.add_argument("vector", nargs="?", help="Ten comma-separated coordinates (classify)")
    roots.add_argument("--base", action="store_true", help="Count the base roots (count)")
    roots.add_argument("--lambda", dest="slope", default="1", help="Slope: integer, b/a or inf (default: 1)")
    roots.add_argument("--samples", type=int, default=500, help="Roots checked by verify-delta (default: 500)")
    roots.add_argument("--verbose", action="store_true", help="List the roots found")
    roots.add_argument("--json", action="store_true",
                       help="Write class records as JSON (count, classify, schur-per-slope)")
    roots.add_argument("-o", "--output", default=None, help="Output file for --json (default: stdout)")

    graph = commands.add_parser("graph", help="Component graphs")
    _common(graph)
    graph.add_argument("action", choices=["build", "cliques", "a5"])
    graph.add_argument("-n", type=int, default=None, help="Rank of the algebra (2..4 for build/cliques)")
    graph.add_argument("--seeds", type=int, default=3, help="Seeds compared for stability (default: 3)")
    graph.add_argument("--check-fixture", action="store_true", help="Diff the n = 4 graph against its fixture")
    graph.add_argument("--reduced", action="store_true", help="Export the graph without projective vertices")
    graph.add_argument("--slope", default=None, help="Single slope for the a5 graph")
    graph.add_argument("--max-numerator", type=int, default=config.SLICE_MAX_NUMERATOR)
    graph.add_argument("--max-denominator", type=int, default=config.SLICE_MAX_DENOMINATOR)
    graph.add_argument("--max-ql", type=int, default=config.SLICE_MAX_QL)
    graph.add_argument("--reading", choices=["literal", "relaxed"], default=config.CRITICAL_READING,
                       help="Quasi-length condition for critical pairs")
    graph.add_argument("-o", "--output", default=None, help="Output file (default: stdout)")
    graph.add_argument("--format", choices=["dot", "json"], default=None,
                       help="Export format (default: from the output extension, .dot or .gv for dot, else json)")

    shuffle = commands.add_parser("shuffle", help="Word polynomials and flag counts")
    _common(shuffle)
    shuffle.add_argument("action", choices=["minor", "expand", "flag", "product"])
    shuffle.add_argument("--rows", default=None, help="Minor rows, comma separated")
    shuffle.add_argument("--cols", default=None, help="Minor columns, comma separated")
    shuffle.add_argument("-n", type=int, default=None, help="Rank of the algebra")
    shuffle.add_argument("--module", default=None, help="Module JSON file")
    shuffle.add_argument("--word", default=None, help="Word, comma separated, top letter first")
    shuffle.add_argument("--mode", choices=["auto", "coordinate", "point_count"], default="auto")
    shuffle.add_argument("--expect", default=None, help="JSON polynomial the expansion must equal")
    shuffle.add_argument("--left", default=None, help="Left factor of a shuffle product")
    shuffle.add_argument("--right", default=None, help="Right factor of a shuffle product")
    shuffle.add_argument("-o", "--output", default=None)
    shuffle.add_argument("--format", choices=["dot", "json"], default=None,
                         help="json writes the expansion as word/coeff records")

    multiseg = commands.add_parser("multiseg", help="Multisegments")
    _common(multiseg)
    multiseg.add_argument("action", choices=["max", "psi", "degree"])
    multiseg.add_argument("value", nargs="?", help="Dimension vector or multisegment")
    multiseg.add_argument("--file", default=None, help="Covering dimension vector JSON (psi)")
    multiseg.add_argument("-n", type=int, default=None, help="Number of vertices (required for degree)")

    return parser.parse_args(argv)


def _required(args, *names) -> bool:
    missing = [f"-{name}" if len(name) == 1 else f"--{name.replace('_', '-')}"
               for name in names if getattr(args, name, None) is None]
    if missing:
        console.print(f"[red]{args.subcommand} {args.action} needs {', '.join(missing)}[/red]")
        return False
    return True


def main(argv=None) -> int:
    """Main entry point"""
    args = parse_arguments(argv)

    # Override config if needed
    if args.fixtures:
        config.FIXTURE_DIR = Path(args.fixtures)
    if getattr(args, "reading", None):
        config.CRITICAL_READING = args.reading
    config.SEED = args.seed
    config.TRIALS = max(args.trials, 1)

    # Setup logging
    log_level = "DEBUG" if args.debug else config.LOG_LEVEL
    setup_logging(level=log_level, environment=config.ENVIRONMENT, log_dir=config.LOG_DIR)

    # Validate the run configuration
    try:
        run = RunConfig(
            subcommand=args.subcommand,
            n=getattr(args, "n", None),
            seed=args.seed,
            trials=args.trials,
            max_numerator=getattr(args, "max_numerator", config.SLICE_MAX_NUMERATOR),
            max_denominator=getattr(args, "max_denominator", config.SLICE_MAX_DENOMINATOR),
            max_ql=getattr(args, "max_ql", config.SLICE_MAX_QL),
            slope=getattr(args, "slope", None),
            output=getattr(args, "output", None),
            format=export_format(getattr(args, "format", None), getattr(args, "output", None)),
        )
    except ValidationError as e:
        console.print(f"[red]Invalid arguments:[/red] {e}")
        return EXIT_USAGE

    # Print startup banner
    console.print("[bold cyan]╔══════════════════════════════════════════════════╗[/bold cyan]")
    console.print("[bold cyan]║         Preprojective Toolkit v1.0.0             ║[/bold cyan]")
    console.print("[bold cyan]╚══════════════════════════════════════════════════╝[/bold cyan]")
    console.print()

    # Display configuration
    console.print("[bold]Configuration:[/bold]")
    console.print(f"  • Command: {run.subcommand} {args.action}")
    console.print(f"  • Seed: {run.seed}")
    console.print(f"  • Trials: {run.trials}")
    if run.n is not None:
        console.print(f"  • n: {run.n}")
    console.print(f"  • Fixtures: {config.fixture_path}")
    console.print()

    # Dispatch to the command handlers
    if args.subcommand == "roots":
        if args.action == "classify" and not _required(args, "vector"):
            return EXIT_USAGE
        return cmd_roots(args)
    if args.subcommand == "graph":
        return cmd_graph(args)
    if args.subcommand == "shuffle":
        needs = {"minor": ("rows", "cols", "n"), "expand": ("module",), "flag": ("module", "word"),
                 "product": ("left", "right")}
        if not _required(args, *needs[args.action]):
            return EXIT_USAGE
        return cmd_shuffle(args)
    if args.subcommand == "multiseg":
        if args.action == "psi":
            if args.file is None and args.value is None:
                console.print("[red]multiseg psi needs --file or an inline JSON vector[/red]")
                return EXIT_USAGE
        elif not _required(args, "value", *(("n",) if args.action == "degree" else ())):
            return EXIT_USAGE
        return cmd_multiseg(args)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
