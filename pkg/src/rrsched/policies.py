"""Ready-queue disciplines for RR, shortest-first RR and ITS RR.

Every policy serves processes cyclically: a preempted process always goes to
the tail. They differ in where a newly admitted process lands and in the
slice handed out per dispatch.
"""
from __future__ import annotations

from collections import deque
from typing import Dict, Set

from .its import compute_its
from .model import Policy, PolicyConfig, ProcessSpec


class SchedulerError(RuntimeError):
    pass


class PolicyState:
    """Ready queue plus per-pid bookkeeping for one simulation run.

    For SRR the queue is split in two: processes that have never been
    dispatched (kept sorted by declared burst, then pid) come first, and the
    cyclic FIFO of already-served processes follows.
    """

    def __init__(self, config: PolicyConfig):
        self.config = config
        self.fresh: list[ProcessSpec] = []
        self.cycled: deque[int] = deque()
        self.remaining: Dict[int, int] = {}
        self.slice_of: Dict[int, int] = {}
        self.finished: Set[int] = set()

    @property
    def queue(self) -> list[int]:
        return [p.pid for p in self.fresh] + list(self.cycled)

    def __len__(self):
        return len(self.fresh) + len(self.cycled)

    def __contains__(self, pid: int) -> bool:
        return any(p.pid == pid for p in self.fresh) or pid in self.cycled

    def admit(self, proc: ProcessSpec) -> None:
        if proc.pid in self:
            raise SchedulerError(f"pid {proc.pid} is already queued")
        if proc.pid in self.finished or proc.pid in self.remaining:
            raise SchedulerError(f"pid {proc.pid} was already admitted")
        cfg = self.config
        self.remaining[proc.pid] = proc.burst
        if cfg.policy is Policy.ITS:
            self.slice_of[proc.pid] = compute_its(proc, cfg).its
        else:
            self.slice_of[proc.pid] = cfg.quantum_ots

        if cfg.policy is Policy.SRR:
            key = (proc.burst, proc.pid)
            i = 0
            while i < len(self.fresh) and (self.fresh[i].burst, self.fresh[i].pid) <= key:
                i += 1
            self.fresh.insert(i, proc)
        else:
            # fresh stays empty for RR and ITS, so this is a plain FIFO
            self.cycled.append(proc.pid)

    def next_dispatch(self) -> tuple[int, int]:
        """Pop the head of the queue; return ``(pid, slice)``."""
        if self.fresh:
            pid = self.fresh.pop(0).pid
        elif self.cycled:
            pid = self.cycled.popleft()
        else:
            raise SchedulerError("next_dispatch on an empty ready queue")
        return pid, self.slice_of[pid]

    def record_run(self, pid: int, ran: int) -> int:
        """Charge ``ran`` ms to ``pid``; return what is left."""
        left = self.remaining[pid] - ran
        if left < 0:
            raise SchedulerError(f"pid {pid} ran past its burst")
        self.remaining[pid] = left
        if left == 0:
            self.finished.add(pid)
        return left

    def requeue_preempted(self, pid: int) -> None:
        if self.remaining.get(pid, 0) <= 0:
            raise SchedulerError(f"pid {pid} has no remaining burst and cannot be requeued")
        if pid in self:
            raise SchedulerError(f"pid {pid} is already queued")
        self.cycled.append(pid)

