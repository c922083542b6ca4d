"""Deterministic discrete-event model of one lock on a big/little machine.

Events at the same tick are processed as one batch: releases first, then
arrivals and standby expiries in thread-id order (big threads hold the lowest
ids). The lock is granted once the batch is done, so every thread that became
ready at that tick competes for it.
"""
import heapq
import random
from collections import deque
from dataclasses import dataclass, field, asdict
from typing import Dict, List, Optional

from amp.CoreType import CoreClass
from asl.Window import FeedbackController
from harness.LatencyRecorder import nearestRank
from utils.Errors import ConfigurationError
from utils.Tools import _pr

RELEASE = 0
ARRIVE = 1
EXPIRE = 2


@dataclass
class SimResult:
    throughput: float = 0.0
    steadyThroughput: float = 0.0
    utilization: float = 0.0
    makespan: int = 0
    completed: int = 0
    acquisitions: Dict[str, int] = field(default_factory=dict)
    waitMean: Dict[str, float] = field(default_factory=dict)
    waitP99: Dict[str, int] = field(default_factory=dict)
    busy: List[int] = field(default_factory=list)
    grantOrder: List[int] = field(default_factory=list)
    epochs: int = 0
    violations: int = 0
    windowTrajectory: List[dict] = field(default_factory=list)

    @property
    def violationRate(self):
        return self.violations / self.epochs if self.epochs else 0.0

    def toDict(self):
        d = asdict(self)
        d['violationRate'] = self.violationRate
        return d


class _WaitList:
    """Enqueued threads; the lock is taken when this is non-empty or held."""

    def __init__(self, sim):
        self.sim = sim
        self.q = deque()

    def push(self, tid):
        self.q.append(tid)

    def __len__(self):
        return len(self.q)

    def pop(self):
        return self.q.popleft()


class _AffinityWaitList(_WaitList):
    ## test-and-set with a preferred class; mixing is the chance the other class wins
    def pop(self):
        cfg = self.sim.cfg
        favored = CoreClass.parse(cfg.affinity)
        classes = self.sim.classes
        preferred = [t for t in self.q if classes[t] is favored]
        others = [t for t in self.q if classes[t] is not favored]
        if others and (not preferred or (cfg.mixing > 0 and self.sim.rng.random() < cfg.mixing)):
            pick = others[0]
        else:
            pick = preferred[0]
        self.q.remove(pick)
        return pick


class _ProportionalWaitList(_WaitList):
    ## B big grants per little grant while both classes wait
    def __init__(self, sim):
        super().__init__(sim)
        self.queues = {CoreClass.BIG: deque(), CoreClass.LITTLE: deque()}
        self.bigStreak = 0

    def push(self, tid):
        self.queues[self.sim.classes[tid]].append(tid)

    def __len__(self):
        return len(self.queues[CoreClass.BIG]) + len(self.queues[CoreClass.LITTLE])

    def pop(self):
        big, little = self.queues[CoreClass.BIG], self.queues[CoreClass.LITTLE]
        if big and (not little or self.bigStreak < self.sim.cfg.batchRatio):
            self.bigStreak += 1
            return big.popleft()
        self.bigStreak = 0
        return little.popleft()


WAIT_LISTS = {
    'fifo': _WaitList,
    'window': _WaitList,
    'slo_feedback': _WaitList,
    'tas_affinity': _AffinityWaitList,
    'proportional': _ProportionalWaitList,
}


class Simulator:
    def __init__(self, cfg):
        self.cfg = cfg
        self.classes = [CoreClass.BIG] * cfg.nBig + [CoreClass.LITTLE] * cfg.nLittle
        self.cost = [cfg.csBig if c is CoreClass.BIG else cfg.littleCost for c in self.classes]
        self.rng = random.Random(cfg.seed)
        self.events = []
        self.now = 0
        self.holder = None
        self.waitList = WAIT_LISTS[cfg.policy](self)

        n = len(self.classes)
        self.requestAt = [0] * n
        self.standbyUntil = [None] * n
        self.busy = [0] * n
        self.controllers = {}
        if cfg.policy == 'slo_feedback':
            sloCfg = cfg.sloConfig()
            for tid in range(cfg.nBig, n):
                self.controllers[tid] = FeedbackController(sloCfg)

        self.completed = 0
        self.grants = []
        self.waits = {CoreClass.BIG: [], CoreClass.LITTLE: []}
        self.csStarts = []
        self.trajectory = []
        self.violations = 0
        self.epochs = 0

    def _push(self, t, kind, tid):
        heapq.heappush(self.events, (t, kind, tid))

    def _reorders(self, tid):
        return self.classes[tid] is CoreClass.LITTLE and self.cfg.policy in ('window', 'slo_feedback')

    def _windowOf(self, tid):
        if self.cfg.policy == 'slo_feedback':
            return self.controllers[tid].window
        return self.cfg.windowTicks

    def _lockFree(self):
        return self.holder is None and len(self.waitList) == 0

    def _enqueue(self, tid):
        self.standbyUntil[tid] = None
        self.waitList.push(tid)

    def _arrive(self, tid):
        self.requestAt[tid] = self.now
        if not self._reorders(tid):
            self._enqueue(tid)
            return
        window = self._windowOf(tid)
        if (window is not None and window < self.cfg.threshold) or self._lockFree():
            self._enqueue(tid)
            return
        ## unbounded window: stand by until the lock is seen free
        self.standbyUntil[tid] = float('inf') if window is None else self.now + window
        if window is not None:
            self._push(self.now + window, EXPIRE, tid)

    def _expire(self, tid):
        if self.standbyUntil[tid] == self.now:
            self._enqueue(tid)

    def _release(self, tid):
        self.holder = None
        self.completed += 1
        self.busy[tid] += self.cost[tid]
        if tid in self.controllers:
            latency = self.now - self.requestAt[tid]
            self._observe(tid, latency)
        if self.completed < self.cfg.horizon:
            self._push(self.now + self.cfg.nonCs, ARRIVE, tid)

    def _observe(self, tid, latency):
        controller = self.controllers[tid]
        before = controller.window
        controller.observe(latency, self.cfg.sloTicks)
        self.epochs += 1
        if latency > self.cfg.sloTicks:
            self.violations += 1
        self.trajectory.append({'thread': tid, 'latency': latency, 'windowBefore': before,
                                'window': controller.window, 'unit': controller.unit})

    def _grant(self):
        if self.holder is not None:
            return
        if len(self.waitList) == 0:
            ## standby threads that see the lock free enqueue, lowest id first
            ready = [t for t, until in enumerate(self.standbyUntil) if until is not None]
            for tid in ready:
                self._enqueue(tid)
            if not ready:
                return
        tid = self.waitList.pop()
        self.holder = tid
        self.grants.append((self.now, tid))
        self.csStarts.append(self.now)
        self.waits[self.classes[tid]].append(self.now - self.requestAt[tid])
        self._push(self.now + self.cost[tid], RELEASE, tid)

    def run(self):
        for tid in range(len(self.classes)):
            self._push(0, ARRIVE, tid)

        handlers = {RELEASE: self._release, ARRIVE: self._arrive, EXPIRE: self._expire}
        while self.events and self.completed < self.cfg.horizon:
            self.now = self.events[0][0]
            while self.events and self.events[0][0] == self.now:
                _, kind, tid = heapq.heappop(self.events)
                handlers[kind](tid)
            if self.completed < self.cfg.horizon:
                self._grant()

        _pr("simulated {} critical sections in {} ticks".format(self.completed, self.now))
        return self._result()

    def _referenceGrants(self):
        ## grant times of the lowest-id little thread, else the lowest-id big one
        byThread = {}
        for t, tid in self.grants:
            byThread.setdefault(tid, []).append(t)
        order = list(range(self.cfg.nBig, len(self.classes))) + list(range(self.cfg.nBig))
        for tid in order:
            if len(byThread.get(tid, [])) >= 3:
                return byThread[tid]
        return None

    def _steadyThroughput(self, overall):
        times = self._referenceGrants()
        if times is None:
            return overall
        first = max(1, int(len(times) * self.cfg.warmupFraction))
        last = len(times) - 1
        if last <= first or times[last] == times[first]:
            return overall
        start, end = times[first], times[last]
        count = sum(1 for t in self.csStarts if start <= t < end)
        return count * self.cfg.csBig / (end - start)

    def _result(self):
        makespan = self.now
        res = SimResult(makespan=makespan, completed=self.completed, busy=list(self.busy))
        if makespan > 0:
            res.throughput = self.completed * self.cfg.csBig / makespan
            res.utilization = sum(self.busy) / makespan
        res.steadyThroughput = self._steadyThroughput(res.throughput)
        res.grantOrder = [tid for _, tid in self.grants]
        for cls, waits in self.waits.items():
            res.acquisitions[cls.value] = len(waits)
            res.waitMean[cls.value] = sum(waits) / len(waits) if waits else 0.0
            res.waitP99[cls.value] = nearestRank(waits, 99) if waits else 0
        res.epochs = self.epochs
        res.violations = self.violations
        res.windowTrajectory = self.trajectory
        return res


def _feedbackOnly(cfg):
    """SLO feedback against a latency model instead of a simulated lock."""
    controller = FeedbackController(cfg.sloConfig())
    if cfg.latencyModel == 'trace':
        source = iter(cfg.latencies)
        count = len(cfg.latencies)
    else:
        source = None
        count = cfg.horizon

    res = SimResult()
    for _ in range(count):
        before = controller.window
        if source is not None:
            latency = next(source)
        else:
            latency = cfg.stepAbove if before > cfg.stepThreshold else cfg.stepBelow
        controller.observe(latency, cfg.sloTicks)
        res.epochs += 1
        if latency > cfg.sloTicks:
            res.violations += 1
        res.windowTrajectory.append({'thread': None, 'latency': latency, 'windowBefore': before,
                                     'window': controller.window, 'unit': controller.unit})
    return res


def simulate(cfg):
    if cfg.policy == 'slo_feedback' and cfg.latencyModel != 'measured':
        return _feedbackOnly(cfg)
    return Simulator(cfg).run()


def steadyStateViolationRate(cfg):
    """Violation fraction from the first violation onwards.

    Epochs before the first violation are the window's initial climb and are
    left out.
    """
    if cfg.policy != 'slo_feedback':
        raise ConfigurationError("violation rate needs the slo_feedback policy, got {}".format(cfg.policy))
    res = simulate(cfg)
    flags = [p['latency'] > cfg.sloTicks for p in res.windowTrajectory]
    if True not in flags:
        return 0.0
    tail = flags[flags.index(True):]
    return sum(tail) / len(tail)


if __name__ == "__main__":
    from model.SimConfig import SimConfig
    for policy in ['fifo', 'proportional(10)', 'window(inf)', 'tas_affinity(big)']:
        r = simulate(SimConfig(nBig=4, nLittle=4, horizon=2000).applyPolicy(policy))
        print(policy, round(r.throughput, 4), round(r.steadyThroughput, 4))
