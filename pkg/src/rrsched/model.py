"""Domain types shared by the policies, the engines and the reporting code.

All times are integer milliseconds.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Iterable, Mapping


class TasksetError(ValueError):
    """Invalid process record or taskset. ``pid`` names the offender when known."""

    def __init__(self, message: str, pid: int | None = None):
        super().__init__(message)
        self.pid = pid


class Policy(str, Enum):
    RR = "rr"
    SRR = "srr"
    ITS = "its"

    @classmethod
    def parse(cls, value: "str | Policy") -> "Policy":
        if isinstance(value, Policy):
            return value
        try:
            return cls(value.lower())
        except ValueError:
            raise ValueError(f"unknown policy {value!r}; expected one of rr, srr, its") from None


@dataclass(frozen=True, order=True)
class ProcessSpec:
    pid: int
    arrival: int
    burst: int
    priority: int = 1

    def __post_init__(self):
        for name in ("pid", "arrival", "burst", "priority"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TasksetError(f"process {self.pid}: {name} must be an integer, got {value!r}", self.pid)
        if self.pid < 1:
            raise TasksetError(f"process {self.pid}: pid must be positive", self.pid)
        if self.arrival < 0:
            raise TasksetError(f"process {self.pid}: negative arrival {self.arrival}", self.pid)
        if self.burst < 1:
            raise TasksetError(f"process {self.pid}: non-positive burst {self.burst}", self.pid)
        if self.priority < 1:
            raise TasksetError(f"process {self.pid}: priority {self.priority} < 1", self.pid)


def _default_pc_map() -> Mapping[int, int]:
    return MappingProxyType({1: 1})


@dataclass(frozen=True)
class PolicyConfig:
    """Scheduler parameters.

    ``quantum_ots`` is the base time slice. ``pc_map`` maps a priority number
    to its slice bonus; priorities missing from the map get no bonus.
    ``switch_overhead`` is dead time charged before every context switch.
    """

    policy: Policy = Policy.RR
    quantum_ots: int = 4
    sc_threshold: int = 10
    pc_map: Mapping[int, int] = field(default_factory=_default_pc_map)
    count_self_redispatch_as_switch: bool = False
    switch_overhead: int = 0

    def __post_init__(self):
        object.__setattr__(self, "policy", Policy.parse(self.policy))
        pc = {int(k): int(v) for k, v in dict(self.pc_map).items()}
        object.__setattr__(self, "pc_map", MappingProxyType(dict(sorted(pc.items()))))
        if self.quantum_ots < 1:
            raise ValueError(f"quantum must be >= 1, got {self.quantum_ots}")
        if self.sc_threshold < 1:
            raise ValueError(f"sc_threshold must be >= 1, got {self.sc_threshold}")
        if self.switch_overhead < 0:
            raise ValueError(f"switch_overhead must be >= 0, got {self.switch_overhead}")
        for prio, bonus in pc.items():
            if prio < 1:
                raise ValueError(f"pc_map key {prio} is not a valid priority")
            if bonus < 0:
                raise ValueError(f"pc_map value for priority {prio} is negative")
        # priorities absent from the map count as 0, so a missing key between
        # two positive entries breaks monotonicity as well
        keys = sorted(pc)
        if keys:
            for prio in range(1, keys[-1] + 1):
                nxt = pc.get(prio + 1, 0)
                if pc.get(prio, 0) < nxt:
                    raise ValueError(
                        f"pc_map must be non-increasing in priority number: "
                        f"priority {prio} -> {pc.get(prio, 0)} < priority {prio + 1} -> {nxt}"
                    )

    def with_policy(self, policy: "str | Policy") -> "PolicyConfig":
        return PolicyConfig(
            policy=Policy.parse(policy),
            quantum_ots=self.quantum_ots,
            sc_threshold=self.sc_threshold,
            pc_map=dict(self.pc_map),
            count_self_redispatch_as_switch=self.count_self_redispatch_as_switch,
            switch_overhead=self.switch_overhead,
        )

    def as_dict(self) -> dict:
        return {
            "policy": self.policy.value,
            "quantum_ots": self.quantum_ots,
            "sc_threshold": self.sc_threshold,
            "pc_map": {str(k): v for k, v in self.pc_map.items()},
            "count_self_redispatch_as_switch": self.count_self_redispatch_as_switch,
            "switch_overhead": self.switch_overhead,
        }


@dataclass(frozen=True)
class ItsBreakdown:
    pid: int
    ots: int
    pc: int
    sc: int
    cc: int
    balance: int
    csc: int
    its: int

    def __post_init__(self):
        if self.cc != self.ots + self.pc + self.sc:
            raise ValueError(f"process {self.pid}: cc != ots + pc + sc")
        if self.its != self.cc + self.csc:
            raise ValueError(f"process {self.pid}: its != ots + pc + sc + csc")
        if self.csc < 0:
            raise ValueError(f"process {self.pid}: negative csc")

    def as_dict(self) -> dict:
        return {
            "pid": self.pid,
            "ots": self.ots,
            "pc": self.pc,
            "sc": self.sc,
            "cc": self.cc,
            "balance": self.balance,
            "csc": self.csc,
            "its": self.its,
        }


@dataclass(frozen=True)
class TimelineSegment:
    pid: int
    start: int
    end: int

    def __post_init__(self):
        if self.end <= self.start:
            raise ValueError(f"empty or reversed segment for process {self.pid}: [{self.start}, {self.end})")

    @property
    def length(self) -> int:
        return self.end - self.start


@dataclass(frozen=True)
class ScheduleTrace:
    """Result of one simulation. One segment per dispatch, in time order."""

    config: PolicyConfig
    taskset: tuple[ProcessSpec, ...]
    segments: tuple[TimelineSegment, ...]
    completions: Mapping[int, int]
    first_dispatch: Mapping[int, int]
    context_switches: int

    def __post_init__(self):
        object.__setattr__(self, "taskset", tuple(self.taskset))
        object.__setattr__(self, "segments", tuple(self.segments))
        object.__setattr__(self, "completions", MappingProxyType(dict(self.completions)))
        object.__setattr__(self, "first_dispatch", MappingProxyType(dict(self.first_dispatch)))
        if self.context_switches < 0:
            raise ValueError("negative context switch count")
        for a, b in zip(self.segments, self.segments[1:]):
            if b.start < a.end:
                raise ValueError(f"overlapping segments {a} and {b}")

    @property
    def dispatches(self) -> int:
        return len(self.segments)

    def segments_of(self, pid: int) -> list[TimelineSegment]:
        return [s for s in self.segments if s.pid == pid]

    def check_invariants(self) -> None:
        """Raise AssertionError if the trace breaks work conservation or causality."""
        specs = {p.pid: p for p in self.taskset}
        done = {pid: 0 for pid in specs}
        for seg in self.segments:
            assert seg.pid in specs, f"segment for unknown pid {seg.pid}"
            assert seg.start >= specs[seg.pid].arrival, f"{seg} starts before arrival"
            done[seg.pid] += seg.length
        for pid, spec in specs.items():
            assert done[pid] == spec.burst, f"pid {pid} ran {done[pid]} ms of {spec.burst}"
            last = max(s.end for s in self.segments if s.pid == pid)
            assert self.completions[pid] == last
            first = min(s.start for s in self.segments if s.pid == pid)
            assert self.first_dispatch[pid] == first
        if self.config.switch_overhead == 0:
            # no gap may contain an instant where some process is arrived and unfinished
            busy_until = 0
            for seg in self.segments:
                if seg.start > busy_until:
                    for p in self.taskset:
                        assert not (p.arrival < seg.start and self.completions[p.pid] > busy_until), (
                            f"processor idle in [{busy_until}, {seg.start}) while pid {p.pid} is ready"
                        )
                busy_until = seg.end


def validate_taskset(specs: Iterable[ProcessSpec]) -> tuple[ProcessSpec, ...]:
    """Check pid uniqueness and return the taskset ordered by (arrival, pid)."""
    specs = list(specs)
    seen: set[int] = set()
    for p in specs:
        if not isinstance(p, ProcessSpec):
            raise TasksetError(f"expected ProcessSpec, got {type(p).__name__}")
        if p.pid in seen:
            raise TasksetError(f"duplicate pid {p.pid}", p.pid)
        seen.add(p.pid)
    return tuple(sorted(specs, key=lambda p: (p.arrival, p.pid)))


# Five-process reference workload (all released at t=0) used by the docs and tests.
CASE_STUDY = (
    ProcessSpec(1, 0, 25, 2),
    ProcessSpec(2, 0, 5, 3),
    ProcessSpec(3, 0, 15, 1),
    ProcessSpec(4, 0, 8, 2),
    ProcessSpec(5, 0, 10, 1),
)
