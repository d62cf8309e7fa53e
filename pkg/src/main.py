"""
Command handlers for the preprojective toolkit

Each handler takes the parsed argparse namespace and returns an exit status:
0 when every requested verification passed, 1 when one failed, 2 for
malformed input.
"""
import json
from pathlib import Path
from typing import List, Optional

import numpy as np
from rich.table import Table

from src.config import config
from src.models import CountingMode, CriticalReading, ExportFormat, ToolkitError
from src.utils.logger import console, toolkit_logger

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise ToolkitError(f"Expected comma-separated integers, got {text!r}")


def _status(ok: bool) -> str:
    return "[green]ok[/green]" if ok else "[red]FAILED[/red]"


def _write_or_print(text: str, output: Optional[str]):
    if output:
        Path(output).write_text(text)
        console.print(f"Wrote {output}")
    else:
        console.print(text, markup=False, highlight=False)


def export_format(fmt: Optional[str], output: Optional[str]) -> str:
    """Explicit format, else dot for .dot/.gv outputs, else json"""
    if fmt:
        return fmt
    if output and Path(output).suffix.lower() in (".dot", ".gv"):
        return ExportFormat.DOT.value
    return ExportFormat.JSON.value


def _guard(handler):
    """Turn toolkit errors into exit status 2 with a readable message"""
    def run(args) -> int:
        try:
            return handler(args)
        except ToolkitError as e:
            toolkit_logger.error(f"{type(e).__name__}: {e}")
            console.print(f"[red]Error:[/red] {e}")
            return EXIT_USAGE
    run.__name__ = handler.__name__
    run.__doc__ = handler.__doc__
    return run


# ---------------------------------------------------------------------------
# roots
# ---------------------------------------------------------------------------

@_guard
def cmd_roots(args) -> int:
    """Root system reports: verify-coxeter, pairings, count, classify, schur-per-slope, verify-delta, e8"""
    from src.roots import classify as rc
    from src.roots.lattice import H0, H_INF, e8_norm, e8_quotient, matrix_order, window_lattice
    from src.roots.maps import delta_map, xi_map

    lat = window_lattice()
    action = args.action

    if action == "verify-coxeter":
        order = matrix_order(lat.phi)
        ok = order == 6
        console.print(f"Phi^6 = I: {'ok' if ok else f'FAILED (order {order})'}")
        return EXIT_OK if ok else EXIT_FAILED

    if action == "pairings":
        values = {
            "<h0,h_inf>": (lat.form(H0, H_INF), 6),
            "<h_inf,h0>": (lat.form(H_INF, H0), -6),
            "q(h0)": (lat.q(H0), 0),
            "q(h_inf)": (lat.q(H_INF), 0),
        }
        table = Table(title="Radical pairings")
        table.add_column("Quantity", style="cyan")
        table.add_column("Value", style="green")
        table.add_column("Status")
        for name, (value, expected) in values.items():
            table.add_row(name, str(value), _status(value == expected))
        console.print(table)
        return EXIT_OK if all(v == e for v, e in values.values()) else EXIT_FAILED

    if action == "count":
        roots = rc.all_base_roots()
        if args.json:
            records = [rc.class_to_json(c, members) for c, members in rc.base_root_classes().items()]
            _write_or_print(json.dumps(records, indent=2), args.output)
            return EXIT_OK if len(roots) == 240 else EXIT_FAILED
        sizes = {}
        for rank, _, _ in rc.base_roots():
            sizes[rank] = sizes.get(rank, 0) + 1
        console.print(len(roots))
        console.print(" + ".join(f"{rank}*{count}" for rank, count in sorted(sizes.items())))
        return EXIT_OK if len(roots) == 240 else EXIT_FAILED

    if action == "classify":
        vector = _ints(args.vector)
        c = rc.classify(vector)
        if args.json:
            _write_or_print(json.dumps(rc.class_to_json(c, [vector]), indent=2), args.output)
            return EXIT_OK
        console.print(f"slope {rc.format_slope(c.slope)}, rank {c.rank}, ql {c.ql}, "
                      f"schur {'yes' if c.ql <= c.rank else 'no'}")
        console.print(f"delta: {delta_map(vector)}")
        return EXIT_OK

    if action == "schur-per-slope":
        value = rc.parse_slope(args.slope)
        classes = rc.schur_classes_of_slope(value)
        roots = sorted({r for members in classes.values() for r in members})
        if args.json:
            records = [rc.class_to_json(c, members) for c, members in classes.items()]
            _write_or_print(json.dumps(records, indent=2), args.output)
            return EXIT_OK if len(roots) == 39 else EXIT_FAILED
        console.print(len(roots))
        if args.verbose:
            for r in roots:
                console.print(f"  {list(r)}  {rc.classify(r)}")
        return EXIT_OK if len(roots) == 39 else EXIT_FAILED

    if action == "verify-delta":
        rng = np.random.default_rng(args.seed)
        slopes = rc.slice_slopes(3, 3)
        failures = 0
        for _ in range(args.samples):
            value = slopes[int(rng.integers(0, len(slopes)))]
            ql = int(rng.integers(1, 8))
            rank = int(rng.choice([1, 2, 3, 6]))
            if rank > 1 and ql % rank == 0:
                ql += 1
            roots = rc.construct_class(value, ql, rank)
            r = roots[int(rng.integers(0, len(roots)))]
            if xi_map(delta_map(r)) != r:
                failures += 1
                toolkit_logger.warning(f"xi(delta({list(r)})) != r")
        console.print(f"xi o delta = id on {args.samples - failures}/{args.samples} roots (seed {args.seed}): "
                      f"{_status(failures == 0)}")
        return EXIT_OK if failures == 0 else EXIT_FAILED

    if action == "e8":
        images = {e8_quotient(r) for r in rc.all_base_roots()}
        norms = {e8_norm(v) for v in images}
        ok = len(images) == 240 and norms == {2}
        console.print(f"{len(images)} distinct images, norms {sorted(norms)}: {_status(ok)}")
        return EXIT_OK if ok else EXIT_FAILED

    raise ToolkitError(f"Unknown roots action {action!r}")


# ---------------------------------------------------------------------------
# graph
# ---------------------------------------------------------------------------

@_guard
def cmd_graph(args) -> int:
    """Component graphs: build, cliques, a5"""
    from src.compgraph import graph as cg
    from src.roots.classify import parse_slope, slice_roots, slice_slopes

    action = args.action
    if action in ("build", "cliques"):
        if args.n is None or not 2 <= args.n <= 4:
            raise ToolkitError("Sampled graphs need -n in 2..4")
        seeds = [args.seed + k for k in range(args.seeds)]
        g, stable = cg.build_graph_stable(args.n, seeds, args.trials)
        reduced = cg.reduced_graph(g, args.n)
        console.print(f"seed {args.seed}, trials {args.trials}, seeds checked {len(seeds)}: "
                      f"{'stable' if stable else 'UNSTABLE'}")

        if action == "cliques":
            cliques = cg.max_cliques(reduced)
            sizes = sorted({len(c) for c in cliques})
            console.print(f"{len(cliques)} cliques, size {','.join(str(s) for s in sizes)}")
            return EXIT_OK if stable else EXIT_FAILED

        status = EXIT_OK if stable else EXIT_FAILED
        summary = f"{reduced.vertex_count} vertices, {reduced.edge_count} edges"
        if args.check_fixture:
            if args.n != 4:
                raise ToolkitError("--check-fixture is only available for n = 4")
            missing, extra = cg.compare_with_fixture(reduced)
            if missing or extra:
                console.print(f"{summary}: [red]MISMATCH[/red]")
                for u, v in missing:
                    console.print(f"  - {u} -- {v}")
                for u, v in extra:
                    console.print(f"  + {u} -- {v}")
                status = EXIT_FAILED
            else:
                console.print(f"{summary}: match")
        else:
            console.print(summary)
        if args.output:
            target = reduced if args.reduced else g
            _write_or_print(cg.export(target, export_format(args.format, args.output)), args.output)
        return status

    if action == "a5":
        if args.slope is not None:
            slopes = [parse_slope(args.slope)]
        else:
            slopes = slice_slopes(args.max_numerator, args.max_denominator)
        roots = slice_roots(args.max_numerator, args.max_denominator, args.max_ql, slopes)
        reading = CriticalReading(args.reading)
        g = cg.build_graph_a5(roots, reading)
        console.print(f"seed {args.seed}: {g.vertex_count} vertices, {g.edge_count} edges "
                      f"({reading.value} reading)")
        _write_or_print(cg.export(g, export_format(args.format, args.output)), args.output)
        return EXIT_OK

    raise ToolkitError(f"Unknown graph action {action!r}")


# ---------------------------------------------------------------------------
# shuffle
# ---------------------------------------------------------------------------

@_guard
def cmd_shuffle(args) -> int:
    """Word polynomials: minor, expand, flag, product"""
    from src.quiver.core import load_rep
    from src.shuffle import flags, tableaux, words

    action = args.action
    if action == "minor":
        p = tableaux.syt_minor(_ints(args.rows), _ints(args.cols), args.n)
        console.print(str(p), markup=False)
        return EXIT_OK

    if action == "expand":
        x = load_rep(args.module)
        p = flags.delta_expansion(x, CountingMode(args.mode))
        if args.format == ExportFormat.JSON.value:
            _write_or_print(json.dumps(p.to_json(), indent=2), args.output)
        else:
            _write_or_print(str(p), args.output)
        if args.expect:
            expected = words.WordPoly.from_json(json.loads(Path(args.expect).read_text())["terms"])
            ok = p == expected
            console.print(f"matches {args.expect}: {_status(ok)}")
            return EXIT_OK if ok else EXIT_FAILED
        return EXIT_OK

    if action == "flag":
        x = load_rep(args.module)
        word = _ints(args.word)
        if flags.is_tree_basis(x):
            value = flags.flag_count(x, word)
        else:
            value = flags.euler_characteristic(x, word)
        console.print(value)
        return EXIT_OK

    if action == "product":
        left = words.parse_wordpoly(args.left)
        right = words.parse_wordpoly(args.right)
        console.print(str(words.shuffle(left, right)), markup=False)
        return EXIT_OK

    raise ToolkitError(f"Unknown shuffle action {action!r}")


# ---------------------------------------------------------------------------
# multiseg
# ---------------------------------------------------------------------------

@_guard
def cmd_multiseg(args) -> int:
    """Multisegments: max, psi, degree"""
    from src.multiseg.covering import TildeDim, psi
    from src.multiseg.multisegments import degree, msm_max, parse_multisegment

    action = args.action
    if action == "max":
        console.print(str(msm_max(_ints(args.value))), markup=False)
        return EXIT_OK

    if action == "psi":
        if args.file:
            try:
                data = json.loads(Path(args.file).read_text())
            except (OSError, json.JSONDecodeError) as e:
                raise ToolkitError(f"Cannot read {args.file}: {e}")
        else:
            data = json.loads(args.value)
        console.print(str(psi(TildeDim.from_json(data))), markup=False)
        return EXIT_OK

    if action == "degree":
        m = parse_multisegment(args.value)
        console.print(",".join(str(x) for x in degree(m, args.n)))
        return EXIT_OK

    raise ToolkitError(f"Unknown multiseg action {action!r}")
