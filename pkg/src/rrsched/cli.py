"""Command line entry point.

Exit status:
    0  success
    2  usage error (unknown flag, bad option value)
    3  taskset file missing or unreadable
    4  taskset parse or validation failure
"""
from __future__ import annotations

import argparse
import json
import sys

from .engine import simulate, tick_simulate
from .io import TasksetFormatError, emit_gantt, emit_taskset, emit_trace, parse_taskset_file
from .metrics import compare, compute_metrics, fmt_ms
from .model import Policy, PolicyConfig, TasksetError
from .workload import generate_taskset

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INVALID = 4


class _Fail(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status


def parse_pc_map(text: str) -> dict[int, int]:
    out = {}
    for item in filter(None, (p.strip() for p in text.split(","))):
        prio, sep, bonus = item.partition(":")
        if not sep:
            raise argparse.ArgumentTypeError(f"bad pc-map entry {item!r}; expected prio:pc")
        try:
            out[int(prio)] = int(bonus)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad pc-map entry {item!r}; expected integers") from None
    return out


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected LO:HI") from None


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--quantum", type=int, default=4, help="base time slice in ms (default 4)")
    p.add_argument("--sc-threshold", type=int, default=10, help="bursts below this get the shortness bonus")
    p.add_argument("--pc-map", type=parse_pc_map, default={1: 1}, help='priority bonuses, e.g. "1:2,2:1"')
    p.add_argument("--overhead", type=int, default=0, help="dead time per context switch in ms")
    p.add_argument("--count-self-switch", action="store_true",
                   help="count re-dispatching the same process as a context switch")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rrsched", description="Round-robin family scheduling simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="simulate one policy")
    run.add_argument("taskset", help="taskset CSV file, or - for stdin")
    run.add_argument("--policy", choices=[p.value for p in Policy], default="rr")
    run.add_argument("--format", choices=["json", "csv", "gantt"], default="json")
    run.add_argument("--oracle", action="store_true", help="use the 1 ms tick simulator")
    _add_config_flags(run)

    cmp_ = sub.add_parser("compare", help="run all three policies and tabulate")
    cmp_.add_argument("taskset")
    cmp_.add_argument("--format", choices=["text", "json"], default="text")
    cmp_.add_argument("--oracle", action="store_true")
    _add_config_flags(cmp_)

    gen = sub.add_parser("gen", help="write a random taskset CSV")
    gen.add_argument("-n", type=int, default=10)
    gen.add_argument("--burst", type=_range, default=(1, 50), metavar="LO:HI")
    gen.add_argument("--priority", type=_range, default=(1, 5), metavar="LO:HI")
    gen.add_argument("--arrival", type=_range, default=(0, 0), metavar="LO:HI")
    gen.add_argument("--seed", type=int, default=0)

    val = sub.add_parser("validate", help="check a taskset CSV")
    val.add_argument("taskset")
    return parser


def _load(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except FileNotFoundError:
        raise _Fail(EXIT_IO, f"{path}: file not found") from None
    except (OSError, UnicodeDecodeError) as exc:
        raise _Fail(EXIT_IO, f"{path}: cannot read: {exc}") from None
    try:
        return parse_taskset_file(text)
    except (TasksetFormatError, TasksetError) as exc:
        raise _Fail(EXIT_INVALID, f"{path}: {exc}") from None


def _config(args, policy) -> PolicyConfig:
    try:
        return PolicyConfig(
            policy=policy,
            quantum_ots=args.quantum,
            sc_threshold=args.sc_threshold,
            pc_map=args.pc_map,
            count_self_redispatch_as_switch=args.count_self_switch,
            switch_overhead=args.overhead,
        )
    except ValueError as exc:
        raise _Fail(EXIT_USAGE, str(exc)) from None


def _run(args, out) -> None:
    taskset = _load(args.taskset)
    config = _config(args, args.policy)
    trace = (tick_simulate if args.oracle else simulate)(taskset, config)
    if args.format == "gantt":
        out.write(emit_gantt(trace))
    else:
        out.write(emit_trace(trace, compute_metrics(trace), args.format))


def _compare(args, out) -> None:
    taskset = _load(args.taskset)
    engine = tick_simulate if args.oracle else simulate
    reports = [(p, compute_metrics(engine(taskset, _config(args, p)))) for p in Policy]
    table = compare(reports)
    if args.format == "text":
        out.write(table.render())
        return
    doc = {
        "rows": [
            {
                "policy": name,
                "avg_waiting": fmt_ms(r.avg_waiting),
                "avg_turnaround": fmt_ms(r.avg_turnaround),
                "context_switches": r.context_switches,
                "dispatches": r.dispatches,
                "throughput": fmt_ms(r.throughput),
            }
            for name, r in table.rows
        ],
        "best": table.best,
        "notes": list(table.notes),
    }
    out.write(json.dumps(doc, indent=2) + "\n")


def _gen(args, out) -> None:
    try:
        taskset = generate_taskset(args.n, args.burst, args.priority, args.arrival, args.seed)
    except ValueError as exc:
        raise _Fail(EXIT_USAGE, str(exc)) from None
    out.write(emit_taskset(taskset))


def _validate(args, out) -> None:
    taskset = _load(args.taskset)
    out.write(f"ok: {len(taskset)} processes\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    handler = {"run": _run, "compare": _compare, "gen": _gen, "validate": _validate}[args.command]
    try:
        handler(args, sys.stdout)
    except _Fail as exc:
        print(f"rrsched: error: {exc}", file=sys.stderr)
        return exc.status
    return EXIT_OK


cli_main = main
