"""Per-process intelligent time slice.

The slice is fixed once, at admission, from the declared burst:

    its = ots + pc + sc + csc

where ``pc`` rewards high priority, ``sc`` rewards short jobs and ``csc``
stretches the slice so a job that would otherwise be left with less than one
base quantum finishes in a single dispatch.
"""
from __future__ import annotations

from typing import Iterable

from .model import ItsBreakdown, PolicyConfig, ProcessSpec


def priority_component(priority: int, config: PolicyConfig) -> int:
    return config.pc_map.get(priority, 0)


def shortness_component(burst: int, config: PolicyConfig) -> int:
    sc = 1 if burst < config.sc_threshold else 0
    # must stay below the burst itself
    return min(sc, burst - 1)


def context_switch_component(burst: int, cc: int, config: PolicyConfig) -> tuple[int, int]:
    """Return ``(balance, csc)``; the leftover is absorbed only when 0 < balance < ots."""
    balance = burst - cc
    csc = balance if 0 < balance < config.quantum_ots else 0
    return balance, csc


def compute_its(proc: ProcessSpec, config: PolicyConfig) -> ItsBreakdown:
    ots = config.quantum_ots
    pc = priority_component(proc.priority, config)
    sc = shortness_component(proc.burst, config)
    cc = ots + pc + sc
    balance, csc = context_switch_component(proc.burst, cc, config)
    return ItsBreakdown(
        pid=proc.pid, ots=ots, pc=pc, sc=sc, cc=cc, balance=balance, csc=csc, its=cc + csc
    )


def its_table(taskset: Iterable[ProcessSpec], config: PolicyConfig) -> list[ItsBreakdown]:
    """Breakdown rows in pid order."""
    return [compute_its(p, config) for p in sorted(taskset, key=lambda p: p.pid)]
