"""Deterministic simulator for round robin, shortest-first round robin and
intelligent-time-slice round robin CPU scheduling."""
from .engine import simulate, tick_simulate
from .io import emit_gantt, emit_taskset, emit_trace, parse_taskset_file
from .its import compute_its, context_switch_component, its_table, priority_component, shortness_component
from .metrics import ComparisonTable, MetricsReport, compare, compute_metrics
from .model import (
    CASE_STUDY,
    ItsBreakdown,
    Policy,
    PolicyConfig,
    ProcessSpec,
    ScheduleTrace,
    TasksetError,
    TimelineSegment,
    validate_taskset,
)
from .policies import PolicyState, SchedulerError
from .workload import generate_taskset

__all__ = [
    "CASE_STUDY",
    "ComparisonTable",
    "ItsBreakdown",
    "MetricsReport",
    "Policy",
    "PolicyConfig",
    "PolicyState",
    "ProcessSpec",
    "ScheduleTrace",
    "SchedulerError",
    "TasksetError",
    "TimelineSegment",
    "compare",
    "compute_its",
    "compute_metrics",
    "context_switch_component",
    "emit_gantt",
    "emit_taskset",
    "emit_trace",
    "generate_taskset",
    "its_table",
    "parse_taskset_file",
    "priority_component",
    "shortness_component",
    "simulate",
    "tick_simulate",
    "validate_taskset",
]
