"""Command-line entry point ``asrg``.

Exit status: 0 on success with every checked bound satisfied, 1 when a checked
bound is violated or a scan verdict is infeasible, 2 on input errors, 3 on
numeric failures.
"""

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import get_args

from asrg_core import InputError, NumericError, Settings
from asrg_core.types import Report
from asrg_geometry import format_cap
from asrg_graphs import write_graph
from asrg_graphs.bounds import ExponentKind
from asrg_graphs.spectral import ApproxCase

from app import reports

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INPUT = 2
EXIT_NUMERIC = 3


def _samples(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"bad sample list {text!r}: {e}") from e


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}: {e}") from e


def _key_values(items: Sequence[str]) -> dict[str, float]:
    params: dict[str, float] = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected key=value, got {item!r}")
        try:
            params[key.strip()] = float(value)
        except ValueError as e:
            raise argparse.ArgumentTypeError(f"bad value in {item!r}") from e
    return params


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asrg",
        description="Approximately strongly regular graphs: constructions, statistics, bounds",
    )
    parser.add_argument("--log-level", help="Override ASRG_LOG_LEVEL")
    parser.add_argument("--workers", type=int, help="Worker threads for batched analyze")
    parser.add_argument("--out", type=Path, help="Write the report here instead of stdout")
    parser.add_argument("--format", choices=["json", "text"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="Describe GF(q)")
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("no-graph", help="Build and audit NO^{eps perp}_{n,q}")
    p.add_argument("--n", type=int, required=True, help="Vector-space dimension")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--eps", type=int, choices=[1, -1], required=True)
    p.add_argument("--clique", action="store_true", help="Also compute the clique number")
    p.add_argument("--tower", action="store_true", help="Also check the neighborhood tower step")
    p.add_argument("--graph-out", type=Path, help="Write the graph file here")

    for name, help_text in (("cap", "Construct a cap"), ("cap-graph", "Cap graph and audit")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--cap", type=Path, help="Read the cap from a cap file")
        p.add_argument("--kind", choices=["conic", "elliptic_quadric", "greedy_random"])
        p.add_argument("--n", type=int, help="Projective dimension")
        p.add_argument("--q", type=int)
        p.add_argument("--seed", type=int, default=0)
        if name == "cap":
            p.add_argument("--cap-out", type=Path, help="Write the cap file here")
        else:
            p.add_argument("--graph-out", type=Path, help="Write the graph file here")

    p = sub.add_parser("analyze", help="Stats, spectrum, E-matrix and bounds of graph files")
    p.add_argument("--graph", type=Path, action="append", required=True)

    p = sub.add_parser("check", help="One named bound")
    p.add_argument("--bound", choices=reports.BOUND_NAMES, required=True)
    p.add_argument("--mode", choices=["exact", "paper"], default="exact")
    p.add_argument("--graph", type=Path, help="Graph file; otherwise use --param")
    p.add_argument("--param", action="append", default=[], help="key=value, e.g. v=10")

    p = sub.add_parser("scan", help="Evaluate a parameter family along samples")
    p.add_argument("--family", type=Path, required=True)
    p.add_argument("--samples", type=_samples, required=True, help="Comma-separated values")

    p = sub.add_parser("tower", help="Common-neighborhood tower level")
    p.add_argument("--graph", type=Path, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--clique-vertices", type=_int_list, help="Comma-separated i-clique")

    p = sub.add_parser("clique", help="Exact clique number")
    p.add_argument("--graph", type=Path, required=True)
    p.add_argument("--limit", type=int, help="Search node budget")

    p = sub.add_parser("exponent", help="Exponent of an upper bound")
    p.add_argument("--kind", choices=get_args(ExponentKind), required=True)
    p.add_argument("--arg", action="append", default=[], help="key=value, e.g. n=10")

    p = sub.add_parser("approx", help="Leading-order restricted eigenvalue")
    p.add_argument("--case", choices=get_args(ApproxCase), required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--lam", type=float, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--nu", type=float, default=0.0)

    sub.add_parser("schema", help="Print the report JSON schema")
    return parser


def _dump(report: Report, fmt: str) -> str:
    if fmt == "text":
        return reports.render_text(report)
    return json.dumps(report.to_json(), indent=2) + "\n"


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _dispatch(args: argparse.Namespace, settings: Settings) -> int:
    cmd = args.command
    if cmd == "schema":
        _emit(json.dumps(Report.model_json_schema(by_alias=True), indent=2) + "\n", args.out)
        return EXIT_OK

    if cmd == "analyze":
        paths: list[Path] = args.graph
        with ThreadPoolExecutor(max_workers=max(1, settings.workers)) as pool:
            results = list(pool.map(lambda p: reports.analyze_graph(p, settings), paths))
        if len(results) == 1:
            _emit(_dump(results[0], args.format), args.out)
        elif args.format == "text":
            _emit("".join(_dump(r, "text") for r in results), args.out)
        else:
            data = [r.to_json() for r in results]
            _emit(json.dumps(data, indent=2) + "\n", args.out)
        return EXIT_VIOLATED if any(r.violated for r in results) else EXIT_OK

    report: Report
    match cmd:
        case "field-info":
            report = reports.field_info(args.q, settings)
        case "no-graph":
            g, report = reports.build_no_graph(
                args.n, args.q, args.eps, settings, with_clique=args.clique, tower=args.tower
            )
            if args.graph_out:
                write_graph(g, args.graph_out)
        case "cap" | "cap-graph":
            cap = reports.load_cap(settings, args.cap, args.kind, args.n, args.q, args.seed)
            inputs: reports.ReportInput = {
                "cap": str(args.cap) if args.cap else None,
                "kind": args.kind,
                "n": cap.space_dim,
                "q": cap.q,
                "seed": args.seed,
            }
            if cmd == "cap":
                report = reports.cap_report(cap, inputs)
                if args.cap_out:
                    args.cap_out.write_text(format_cap(cap))
            else:
                g, report = reports.cap_graph_report(cap, inputs, settings)
                if args.graph_out:
                    write_graph(g, args.graph_out)
        case "check":
            if args.graph is not None:
                report = reports.check_graph(args.graph, args.bound, args.mode, settings)
            else:
                params = _key_values(args.param)
                report = reports.check_params(args.bound, params, args.mode, settings)
            _emit(_dump(report, args.format), args.out)
            return EXIT_VIOLATED if any(not b.satisfied for b in report.bounds) else EXIT_OK
        case "scan":
            report = reports.scan_family(args.family, args.samples, settings)
        case "tower":
            report = reports.tower_report(
                args.graph, args.m, args.i, args.clique_vertices, settings
            )
        case "clique":
            report = reports.clique_graph_report(args.graph, settings, args.limit)
        case "exponent":
            report = reports.exponent_report(args.kind, _key_values(args.arg))
        case "approx":
            report = reports.approx_report(args.case, args.k, args.lam, args.mu, args.nu)
        case _:
            raise InputError(f"unknown command {cmd}")
    _emit(_dump(report, args.format), args.out)
    return EXIT_VIOLATED if report.violated else EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, run one subcommand and return its exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT

    settings = Settings()
    if args.log_level:
        settings.log_level = args.log_level
    if args.workers:
        settings.workers = args.workers
    logging.basicConfig(
        level=settings.log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        return _dispatch(args, settings)
    except (InputError, argparse.ArgumentTypeError, OSError) as e:
        sys.stderr.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_INPUT
    except NumericError as e:
        sys.stderr.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_NUMERIC


def main() -> None:
    """Main entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
