"""Command-line front door: validate, rank, authorize, sweep, serve.

Exit codes: 0 success, 1 domain errors (bad hierarchy, no candidate role),
2 usage errors. Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from pathlib import Path
from typing import IO, Sequence

from . import report
from .errors import RoleRankError
from .hierarchy import parse_hierarchy, validate
from .ranking import (
    EXTENDED_CRITERIA,
    geometric_grid,
    make_query,
    rank_roles,
    sensitivity_sweep,
)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2


def _parse_require(value: str) -> list[str]:
    """Comma-separated permission ids, or @file with one id per line."""
    if value.startswith("@"):
        lines = Path(value[1:]).read_text(encoding="utf-8").splitlines()
        ids = [line.strip() for line in lines if line.strip()]
    else:
        ids = [item.strip() for item in value.split(",") if item.strip()]
    if not ids:
        raise argparse.ArgumentTypeError("--require needs at least one permission id")
    return ids


def _parse_criteria(value: str) -> list[str]:
    ids = [item.strip() for item in value.split(",") if item.strip()]
    unknown = [item for item in ids if item not in EXTENDED_CRITERIA]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown criteria {', '.join(unknown)}; choose from {', '.join(EXTENDED_CRITERIA)}"
        )
    return ids


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rolerank",
        description="Rank candidate RBAC roles for a permission request by leakage risk.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(cmd: argparse.ArgumentParser, with_query: bool) -> None:
        cmd.add_argument("--hierarchy", required=True, help="path to the hierarchy (RHF) file")
        cmd.add_argument(
            "--output", choices=("tsv", "json"), default="tsv", help="output format"
        )
        if with_query:
            cmd.add_argument(
                "--require",
                required=True,
                type=_parse_require,
                help="comma-separated permission ids, or @file with one id per line",
            )
            cmd.add_argument("--s", type=float, default=1.0, help="danger ratio (default 1.0)")
            cmd.add_argument(
                "--criteria",
                type=_parse_criteria,
                default=[],
                help=f"extra criteria to enable: {','.join(EXTENDED_CRITERIA)}",
            )
            cmd.add_argument("--alpha", type=float, default=1.0, help="manager-cost exponent")
            cmd.add_argument(
                "--lambda",
                dest="lambda_",
                type=float,
                default=1.0,
                help="manager-cost scale constant",
            )

    cmd = sub.add_parser("validate", help="parse a hierarchy and report findings")
    add_common(cmd, with_query=False)

    cmd = sub.add_parser("rank", help="rank every candidate role for a request")
    add_common(cmd, with_query=True)
    cmd.add_argument("--plot", help="also render the ranking as a figure at this path")

    cmd = sub.add_parser("authorize", help="print the single recommended role")
    add_common(cmd, with_query=True)

    cmd = sub.add_parser("sweep", help="re-rank across a grid of danger ratios")
    add_common(cmd, with_query=True)
    cmd.add_argument("--s-min", type=float, default=0.1, help="grid lower bound")
    cmd.add_argument("--s-max", type=float, default=10.0, help="grid upper bound")
    cmd.add_argument("--steps", type=int, default=21, help="number of grid points")
    cmd.add_argument("--plot", help="also render probability-vs-s curves at this path")

    cmd = sub.add_parser("serve", help="run the HTTP service")
    cmd.add_argument("--hierarchy", help="optional hierarchy to preload")
    cmd.add_argument("--host", default="127.0.0.1")
    cmd.add_argument("--port", type=int, default=8080)
    cmd.add_argument(
        "--static-dir",
        help="directory of admin UI assets to serve at / (default: ./frontend/dist if present)",
    )
    return parser


def _load_graph(path: str):
    return parse_hierarchy(Path(path).read_text(encoding="utf-8"))


def _build_query(args: argparse.Namespace):
    return make_query(
        args.require,
        s=args.s,
        extended=args.criteria,
        alpha=args.alpha,
        lambda_=args.lambda_,
    )


def _emit_json(payload: dict, stdout: IO[str]) -> None:
    stdout.write(json.dumps(payload, indent=2) + "\n")


def _cmd_validate(args: argparse.Namespace, stdout: IO[str]) -> int:
    graph = _load_graph(args.hierarchy)
    result = validate(graph)
    if args.output == "json":
        _emit_json(result.to_dict(), stdout)
    else:
        if not result.issues:
            stdout.write("ok\n")
        for issue in result.issues:
            stdout.write(
                f"{issue.severity}\t{issue.code}\t{issue.location or '-'}\t{issue.message}\n"
            )
    return EXIT_OK if result.ok else EXIT_DOMAIN_ERROR


def _cmd_rank(args: argparse.Namespace, stdout: IO[str]) -> int:
    graph = _load_graph(args.hierarchy)
    result = rank_roles(graph, _build_query(args))
    if args.output == "json":
        _emit_json(report.ranking_to_dict(result), stdout)
    else:
        stdout.write(report.render_ranking_tsv(result))
    if args.plot:
        report.save_ranking_figure(result, args.plot)
    return EXIT_OK


def _cmd_authorize(args: argparse.Namespace, stdout: IO[str]) -> int:
    graph = _load_graph(args.hierarchy)
    result = rank_roles(graph, _build_query(args))
    if args.output == "json":
        _emit_json({"mode": result.mode, "selected": result.selected}, stdout)
    else:
        stdout.write(f"{result.mode} {result.selected}\n")
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace, stdout: IO[str]) -> int:
    graph = _load_graph(args.hierarchy)
    grid = geometric_grid(args.s_min, args.s_max, args.steps)
    sweep = sensitivity_sweep(graph, _build_query(args), grid)
    if args.output == "json":
        _emit_json(report.sweep_to_dict(sweep), stdout)
    else:
        stdout.write(report.render_sweep_tsv(sweep))
    if args.plot:
        report.save_sweep_figure(sweep, args.plot)
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace, stdout: IO[str]) -> int:
    import uvicorn

    from .service import create_app, default_static_dir

    static_dir = Path(args.static_dir) if args.static_dir else default_static_dir()
    app = create_app(hierarchy_path=args.hierarchy, static_dir=static_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "rank": _cmd_rank,
    "authorize": _cmd_authorize,
    "sweep": _cmd_sweep,
    "serve": _cmd_serve,
}


def run(argv: Sequence[str], stdout: IO[str] = sys.stdout, stderr: IO[str] = sys.stderr) -> int:
    """Dispatch one CLI invocation; returns the process exit code."""
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, stdout)
    except (RoleRankError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN_ERROR


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
