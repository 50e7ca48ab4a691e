"""Simulation drivers.

``simulate`` jumps the clock from dispatch to dispatch. ``tick_simulate``
walks time one millisecond at a time with its own queue bookkeeping and
exists to cross-check the first.

Ordering at a single instant: completions, then arrivals, then the requeue
of a preempted process, then the next dispatch. A segment is emitted per
dispatch, so back-to-back dispatches of the same process stay separate.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable

from .its import compute_its
from .model import Policy, PolicyConfig, ProcessSpec, ScheduleTrace, TimelineSegment, validate_taskset
from .policies import PolicyState


def _is_switch(prev: int | None, pid: int, config: PolicyConfig) -> bool:
    if prev is None:
        return False
    return pid != prev or config.count_self_redispatch_as_switch


def simulate(taskset: Iterable[ProcessSpec], config: PolicyConfig) -> ScheduleTrace:
    procs = validate_taskset(taskset)
    pending = deque(procs)
    state = PolicyState(config)
    segments: list[TimelineSegment] = []
    completions: dict[int, int] = {}
    first: dict[int, int] = {}
    switches = 0
    prev: int | None = None
    now = 0

    def admit_until(t: int) -> None:
        while pending and pending[0].arrival <= t:
            state.admit(pending.popleft())

    admit_until(now)
    while pending or len(state):
        if not len(state):
            now = max(now, pending[0].arrival)
            admit_until(now)
            continue
        pid, slice_ms = state.next_dispatch()
        if _is_switch(prev, pid, config):
            switches += 1
            if config.switch_overhead:
                now += config.switch_overhead
                admit_until(now)
        ran = min(slice_ms, state.remaining[pid])
        segments.append(TimelineSegment(pid, now, now + ran))
        first.setdefault(pid, now)
        now += ran
        left = state.record_run(pid, ran)
        admit_until(now)
        if left:
            state.requeue_preempted(pid)
        else:
            completions[pid] = now
        prev = pid

    return ScheduleTrace(
        config=config,
        taskset=procs,
        segments=segments,
        completions=completions,
        first_dispatch=first,
        context_switches=switches,
    )


def tick_simulate(taskset: Iterable[ProcessSpec], config: PolicyConfig) -> ScheduleTrace:
    procs = validate_taskset(taskset)
    by_pid = {p.pid: p for p in procs}
    if config.policy is Policy.ITS:
        quantum = {p.pid: compute_its(p, config).its for p in procs}
    else:
        quantum = {p.pid: config.quantum_ots for p in procs}
    remaining = {p.pid: p.burst for p in procs}
    arrivals: dict[int, list[int]] = {}
    for p in procs:
        arrivals.setdefault(p.arrival, []).append(p.pid)
    dispatched: set[int] = set()
    completions: dict[int, int] = {}

    ready: list[int] = []
    ticks: list[tuple[int, int, int]] = []  # (time, pid, dispatch number)
    current: int | None = None
    slice_left = 0
    overhead_left = 0
    dispatch_no = 0
    prev: int | None = None
    switches = 0
    t = 0

    while len(completions) < len(procs):
        ready.extend(arrivals.get(t, ()))
        if current is not None and overhead_left == 0 and slice_left == 0:
            ready.append(current)
            current = None
        if current is None and ready:
            if config.policy is Policy.SRR and any(pid not in dispatched for pid in ready):
                pick = min(
                    (pid for pid in ready if pid not in dispatched),
                    key=lambda pid: (by_pid[pid].burst, pid),
                )
            else:
                pick = ready[0]
            ready.remove(pick)
            dispatched.add(pick)
            if prev is not None and (pick != prev or config.count_self_redispatch_as_switch):
                switches += 1
                overhead_left = config.switch_overhead
            current = pick
            prev = pick
            slice_left = quantum[pick]
            dispatch_no += 1
        if current is not None:
            if overhead_left:
                overhead_left -= 1
            else:
                ticks.append((t, current, dispatch_no))
                remaining[current] -= 1
                slice_left -= 1
                if remaining[current] == 0:
                    completions[current] = t + 1
                    current = None
        t += 1

    segments: list[TimelineSegment] = []
    first: dict[int, int] = {}
    run_start = None
    for i, (tt, pid, no) in enumerate(ticks):
        if run_start is None:
            run_start = tt
        nxt = ticks[i + 1] if i + 1 < len(ticks) else None
        if nxt is None or nxt[2] != no:
            segments.append(TimelineSegment(pid, run_start, tt + 1))
            first.setdefault(pid, run_start)
            run_start = None

    return ScheduleTrace(
        config=config,
        taskset=procs,
        segments=segments,
        completions=completions,
        first_dispatch=first,
        context_switches=switches,
    )
