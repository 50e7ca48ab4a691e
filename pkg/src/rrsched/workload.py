"""Seeded synthetic tasksets.

Draws come from numpy's PCG64 bit generator seeded directly with the user's
64-bit seed (``numpy.random.Generator(PCG64(seed))``). For each process, in
pid order, three integers are drawn: burst, priority, arrival, each uniform on
its closed range. Keep this order fixed; golden corpora depend on it.
"""
from __future__ import annotations

import numpy as np

from .model import ProcessSpec, validate_taskset

Range = tuple[int, int]


def _check_range(name: str, r: Range, floor: int) -> tuple[int, int]:
    lo, hi = (int(v) for v in r)
    if lo > hi:
        raise ValueError(f"{name} range is empty: [{lo}, {hi}]")
    if lo < floor:
        raise ValueError(f"{name} range must start at >= {floor}, got {lo}")
    return lo, hi


def generate_taskset(
    n: int,
    burst_range: Range = (1, 50),
    priority_range: Range = (1, 5),
    arrival_range: Range = (0, 0),
    seed: int = 0,
) -> tuple[ProcessSpec, ...]:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not 0 <= seed < 2**64:
        raise ValueError("seed must fit in an unsigned 64-bit integer")
    b_lo, b_hi = _check_range("burst", burst_range, 1)
    p_lo, p_hi = _check_range("priority", priority_range, 1)
    a_lo, a_hi = _check_range("arrival", arrival_range, 0)

    rng = np.random.Generator(np.random.PCG64(seed))
    procs = []
    for pid in range(1, n + 1):
        burst = int(rng.integers(b_lo, b_hi, endpoint=True))
        prio = int(rng.integers(p_lo, p_hi, endpoint=True))
        arrival = int(rng.integers(a_lo, a_hi, endpoint=True))
        procs.append(ProcessSpec(pid, arrival, burst, prio))
    return validate_taskset(procs)
