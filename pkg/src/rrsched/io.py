"""Taskset CSV, trace JSON/CSV and the text Gantt chart."""
from __future__ import annotations

import csv
import io
import json

from .its import its_table
from .metrics import MetricsReport, compute_metrics, fmt_ms, rounded, truncated
from .model import Policy, ProcessSpec, ScheduleTrace, TasksetError, validate_taskset

TASKSET_HEADER = ("pid", "arrival", "burst", "priority")


class TasksetFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def parse_taskset_file(text: str) -> tuple[ProcessSpec, ...]:
    """Parse ``pid,arrival,burst,priority`` CSV. Blank lines are ignored."""
    lines = text.splitlines()
    rows = [(i, line) for i, line in enumerate(lines, start=1) if line.strip()]
    if not rows:
        raise TasksetFormatError("missing header 'pid,arrival,burst,priority'", 1)
    lineno, header = rows[0]
    fields = tuple(f.strip().lower() for f in header.split(","))
    if fields != TASKSET_HEADER:
        raise TasksetFormatError(f"expected header {','.join(TASKSET_HEADER)!r}, got {header!r}", lineno)

    procs = []
    seen: dict[int, int] = {}
    for lineno, line in rows[1:]:
        parts = [f.strip() for f in line.split(",")]
        if len(parts) != 4:
            raise TasksetFormatError(f"expected 4 fields, got {len(parts)}", lineno)
        try:
            values = [int(f) for f in parts]
        except ValueError:
            raise TasksetFormatError(f"non-integer field in {line!r}", lineno) from None
        try:
            proc = ProcessSpec(*values)
        except TasksetError as exc:
            raise TasksetFormatError(str(exc), lineno) from None
        if proc.pid in seen:
            raise TasksetFormatError(f"duplicate pid {proc.pid} (first on line {seen[proc.pid]})", lineno)
        seen[proc.pid] = lineno
        procs.append(proc)
    return validate_taskset(procs)


def emit_taskset(taskset) -> str:
    out = [",".join(TASKSET_HEADER)]
    for p in sorted(taskset, key=lambda p: p.pid):
        out.append(f"{p.pid},{p.arrival},{p.burst},{p.priority}")
    return "\n".join(out) + "\n"


def _num(x):
    # integers stay integers; other rationals become floats
    return x.numerator if x.denominator == 1 else float(x)


def trace_to_dict(trace: ScheduleTrace, metrics: MetricsReport | None = None) -> dict:
    metrics = metrics or compute_metrics(trace)
    doc = {
        "policy": trace.config.policy.value,
        "config": trace.config.as_dict(),
        "segments": [{"pid": s.pid, "start": s.start, "end": s.end} for s in trace.segments],
    }
    if trace.config.policy is Policy.ITS:
        doc["its_table"] = [row.as_dict() for row in its_table(trace.taskset, trace.config)]
    doc["per_process"] = [
        {
            "pid": m.pid,
            "completion": m.completion,
            "waiting": m.waiting,
            "turnaround": m.turnaround,
            "response": m.response,
        }
        for m in metrics.per_process
    ]
    doc["aggregate"] = {
        "n": metrics.n,
        "avg_waiting": _num(metrics.avg_waiting),
        "avg_waiting_exact": str(metrics.avg_waiting),
        "avg_turnaround": _num(metrics.avg_turnaround),
        "avg_turnaround_exact": str(metrics.avg_turnaround),
        "avg_waiting_truncated": truncated(metrics.avg_waiting),
        "avg_waiting_rounded": rounded(metrics.avg_waiting),
        "avg_turnaround_truncated": truncated(metrics.avg_turnaround),
        "avg_turnaround_rounded": rounded(metrics.avg_turnaround),
        "context_switches": metrics.context_switches,
        "dispatches": metrics.dispatches,
        "throughput": _num(metrics.throughput),
        "throughput_exact": str(metrics.throughput),
        "makespan": metrics.makespan,
    }
    return doc


def emit_trace(trace: ScheduleTrace, metrics: MetricsReport | None = None, format: str = "json") -> str:
    if format == "json":
        return json.dumps(trace_to_dict(trace, metrics), indent=2) + "\n"
    if format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["pid", "start", "end"])
        for s in trace.segments:
            w.writerow([s.pid, s.start, s.end])
        return buf.getvalue()
    raise ValueError(f"unknown trace format {format!r}")


def emit_gantt(trace: ScheduleTrace, scale: int = 1) -> str:
    """Single-lane text Gantt chart.

    Each bar is ``scale`` columns per ms, widened to fit its label when
    needed; idle gaps are drawn with ``.``. The second line marks every
    boundary time that fits.
    """
    lane = "|"
    marks: list[tuple[int, int]] = [(0, 0)]
    cursor = 0
    for seg in trace.segments:
        if seg.start > cursor:
            width = max((seg.start - cursor) * scale, 1)
            lane += "." * width + "|"
            marks.append((len(lane) - 1, seg.start))
        label = f"P{seg.pid}"
        width = max(seg.length * scale, len(label))
        lane += label.center(width) + "|"
        marks.append((len(lane) - 1, seg.end))
        cursor = seg.end

    axis = ""
    for pos, t in marks:
        text = str(t)
        if pos < len(axis) + (1 if axis else 0):
            continue
        axis = axis.ljust(pos) + text
    return lane + "\n" + axis + "\n"
