"""Command-line client for the scenario runner.

Subcommands
-----------
run       --config <path> [--output <path>] [--format csv|json] [--server URL]
limits    --config <path> [--server URL]
selftest  [--server URL]
serve     [--host HOST] [--port PORT]

By default the commands execute in-process against the core package; with
``--server`` they become thin HTTP clients of a running service instance
(CSV rendering always happens client-side, so output is identical either
way).

Exit codes: 0 success, 2 config error, 3 numerical-convergence error,
4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .dephasing import long_time_a0
from .errors import CONFIG_ERRORS, NUMERICAL_ERRORS, DephasimError
from .scenario import (
    ResultRow,
    ResultTable,
    config_from_dict,
    emit,
    parse_config,
    run_scenario,
)
from .selftest import run_selftest

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4


def _read_config_text(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise _CliIOError(f"cannot read config {path}: {exc}") from exc


class _CliIOError(Exception):
    pass


def _post(server: str, endpoint: str, payload: dict | None):
    import httpx

    url = server.rstrip("/") + endpoint
    try:
        if payload is None:
            response = httpx.get(url, timeout=600.0)
        else:
            response = httpx.post(url, json=payload, timeout=600.0)
    except httpx.HTTPError as exc:
        raise _CliIOError(f"cannot reach server {server}: {exc}") from exc
    if response.status_code == 400:
        raise DephasimError(f"server rejected config: {response.json().get('detail')}")
    if response.status_code == 422:
        raise NUMERICAL_ERRORS[0](f"server: {response.json().get('detail')}")
    if response.status_code != 200:
        raise _CliIOError(f"server returned HTTP {response.status_code}: {response.text}")
    return response.json()


def _table_from_response(doc: dict, quantities: tuple) -> ResultTable:
    rows = tuple(
        ResultRow(
            t=row["t"],
            a=complex(row["re_a"], row["im_a"]),
            purity=row.get("purity"),
            coherence=row.get("coherence"),
            negativity=row.get("negativity"),
        )
        for row in doc["rows"]
    )
    return ResultTable(rows, doc["metadata"], quantities)


def _cmd_run(args) -> int:
    text = _read_config_text(args.config)
    config = parse_config(text)
    if args.server:
        doc = _post(args.server, "/run", json.loads(text))
        table = _table_from_response(doc, config.quantities)
    else:
        table = run_scenario(config)
    try:
        emit(table, args.format, args.output)
    except OSError as exc:
        raise _CliIOError(f"cannot write output: {exc}") from exc
    return EXIT_OK


def _cmd_limits(args) -> int:
    text = _read_config_text(args.config)
    if args.server:
        doc = _post(args.server, "/limits", json.loads(text))
        ohmicity, limit = doc["ohmicity_class"], doc["long_time_a0"]
    else:
        config = parse_config(text)
        ohmicity = config.spectrum.ohmicity().value
        try:
            limit = long_time_a0(config.spectrum)
        except DephasimError:
            limit = None
    print(f"ohmicity_class: {ohmicity}")
    if limit is None:
        print("long_time_a0: unavailable (requires an analytic Drude tail)")
    else:
        print(f"long_time_a0: {limit:.12g}")
    return EXIT_OK


def _cmd_selftest(args) -> int:
    if args.server:
        doc = _post(args.server, "/selftest", None)
        checks = [(c["name"], c["passed"], c["detail"]) for c in doc["checks"]]
    else:
        checks = [(c.name, c.passed, c.detail) for c in run_selftest()]
    n_failed = sum(1 for _, ok, _ in checks if not ok)
    for name, ok, detail in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    print(f"{n_failed} of {len(checks)} checks failed" if n_failed
          else "all checks passed")
    return EXIT_OK if n_failed == 0 else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dephasim",
        description="Exact pure-dephasing dynamics of qubits coupled to a bosonic bath.",
    )
    parser.add_argument("--version", action="version", version=f"dephasim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a scenario config and emit a table")
    p_run.add_argument("--config", required=True, help="path to a JSON scenario document")
    p_run.add_argument("--output", default=None, help="output path (default: stdout)")
    p_run.add_argument("--format", choices=("csv", "json"), default="csv")
    p_run.add_argument("--server", default=None, help="base URL of a running service")
    p_run.set_defaults(fn=_cmd_run)

    p_lim = sub.add_parser("limits", help="print ohmicity class and long-time envelope")
    p_lim.add_argument("--config", required=True)
    p_lim.add_argument("--server", default=None)
    p_lim.set_defaults(fn=_cmd_limits)

    p_self = sub.add_parser("selftest", help="run the analytic-oracle battery")
    p_self.add_argument("--server", default=None)
    p_self.set_defaults(fn=_cmd_selftest)

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(fn=_cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CONFIG_ERRORS as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NUMERICAL_ERRORS as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (_CliIOError, OSError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
