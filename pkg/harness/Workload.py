import random
import threading
import traceback
from dataclasses import dataclass, field
from typing import List

from amp.Clock import nowNs
from amp.CoreType import CoreClass, logicalCores, pinThread
from amp.Emulation import emulatedWork
from harness.LatencyRecorder import LatencyRecorder
from utils.Errors import WorkerError
from utils.Tools import _pr


def workerSeed(seed, tid):
    return seed * 1000003 + tid


def drawLength(rng, mix, baseNs):
    ## one epoch length from the (multiplier, share) mix
    if len(mix) == 1:
        return baseNs * mix[0][0]
    x = rng.random()
    acc = 0.0
    for multiplier, share in mix:
        acc += share
        if x < acc:
            return baseNs * multiplier
    return baseNs * mix[-1][0]


def epochLengths(cfg, tid, count):
    """The first count epoch lengths worker tid draws under cfg.seed."""
    rng = random.Random(workerSeed(cfg.seed, tid))
    return [drawLength(rng, cfg.mix, cfg.csNs) for _ in range(count)]


class Worker:
    def __init__(self, tid, coreClass, seed):
        self.tid = tid
        self.coreClass = coreClass
        self.rng = random.Random(seed)
        self.recorder = LatencyRecorder(coreClass)
        self.count = 0
        self.series = []
        self.error = None
        self.pinned = None
        ## per-operation counters of data-structure workloads
        self.ops = {}


@dataclass
class WorkloadResult:
    workers: List[Worker] = field(default_factory=list)
    elapsedNs: int = 0
    errors: List[str] = field(default_factory=list)

    @property
    def completed(self):
        return sum(w.count for w in self.workers)

    def ofClass(self, coreClass):
        return [w for w in self.workers if w.coreClass is coreClass]


class Workload:
    """Fixed-duration worker pool. Every worker repeats one epoch:
    lock, critical section, unlock, then non-critical work outside the epoch.

    Workers only touch their own Worker object; results are merged afterwards.
    """

    def __init__(self, cfg, lock, profile, runtime = None, coreTypeMap = None, locks = None, lengthFn = None, body = None, trackSeries = False):
        self.cfg = cfg
        self.locks = locks if locks is not None else [lock]
        self.profile = profile
        self.runtime = runtime
        self.coreTypeMap = coreTypeMap if coreTypeMap is not None else getattr(runtime, 'coreTypeMap', None)
        self.lengthFn = lengthFn
        self.body = body
        self.trackSeries = trackSeries
        self.useEpochs = runtime is not None and cfg.sloNs is not None
        self.epochId = runtime.nextEpochId() if self.useEpochs else None

        self._stop = threading.Event()
        self._startBarrier = None
        self._t0 = 0

    def _coreFor(self, worker, cores):
        if self.coreTypeMap is not None and self.coreTypeMap.mapping:
            own = self.coreTypeMap.coresOf(worker.coreClass)
            if own:
                return own[worker.tid % len(own)]
        return cores[worker.tid % len(cores)]

    def _epochLength(self, worker):
        if self.lengthFn is not None:
            return self.lengthFn(worker, nowNs() - self._t0)
        return drawLength(worker.rng, self.cfg.mix, self.cfg.csNs)

    def _criticalSection(self, worker, lengthNs):
        if self.body is not None:
            self.body(worker, lengthNs)
        else:
            emulatedWork(lengthNs, worker.coreClass, self.profile)

    def _epoch(self, worker, records):
        lengthNs = self._epochLength(worker)
        start = nowNs()
        if self.useEpochs:
            self.runtime.epochStart(self.epochId)

        tokens = []
        try:
            for lock, record in zip(self.locks, records):
                tokens.append(lock.acquire(record))
            self._criticalSection(worker, lengthNs)
        finally:
            for lock, token in reversed(list(zip(self.locks, tokens))):
                lock.release(token)

        if self.useEpochs:
            latency = self.runtime.epochEnd(self.epochId, self.cfg.sloNs)
        else:
            latency = nowNs() - start

        worker.recorder.record(latency)
        worker.count += 1
        if self.trackSeries:
            window = self.runtime.window(self.epochId) if self.useEpochs else None
            worker.series.append([start - self._t0, latency, window, lengthNs])

    def _work(self, worker, cores):
        try:
            if self.coreTypeMap is not None:
                self.coreTypeMap.declare(worker.coreClass)
            if self.cfg.pin:
                worker.pinned = pinThread(self._coreFor(worker, cores))
            records = [lock.newRecord(worker.coreClass) for lock in self.locks]
            self._startBarrier.wait()

            while not self._stop.is_set():
                self._epoch(worker, records)
                if self.cfg.nonCsNs > 0:
                    emulatedWork(self.cfg.nonCsNs, worker.coreClass, self.profile, yielding=True)
        except threading.BrokenBarrierError:
            pass
        except Exception:
            worker.error = traceback.format_exc()
            self._stop.set()
            if self._startBarrier is not None:
                self._startBarrier.abort()

    def buildWorkers(self, nBig = None, nLittle = None):
        nBig = self.cfg.nBig * self.cfg.oversubscription if nBig is None else nBig
        nLittle = self.cfg.nLittle * self.cfg.oversubscription if nLittle is None else nLittle
        classes = [CoreClass.BIG] * nBig + [CoreClass.LITTLE] * nLittle
        return [Worker(tid, cls, workerSeed(self.cfg.seed, tid)) for tid, cls in enumerate(classes)]

    def run(self, durationS = None):
        durationS = self.cfg.durationS if durationS is None else durationS
        workers = self.buildWorkers()
        cores = logicalCores()
        self._stop.clear()
        self._startBarrier = threading.Barrier(len(workers) + 1)

        threads = []
        for w in workers:
            t = threading.Thread(target=self._work, args=(w, cores), name="worker-{}-{}".format(w.coreClass.value, w.tid), daemon=True)
            try:
                t.start()
            except RuntimeError as e:
                self._stop.set()
                self._startBarrier.abort()
                raise WorkerError("could not start worker {}: {}".format(w.tid, e))
            threads.append(t)

        self._t0 = start = nowNs()
        try:
            self._startBarrier.wait()
        except threading.BrokenBarrierError:
            pass
        self._stop.wait(durationS)
        self._stop.set()
        for t in threads:
            t.join()
        elapsed = nowNs() - start

        result = WorkloadResult(workers=workers, elapsedNs=elapsed)
        result.errors = [w.error for w in workers if w.error]
        for w in workers:
            _pr("worker {} ({}) finished {} epochs".format(w.tid, w.coreClass.value, w.count))
        return result


if __name__ == "__main__":
    from harness.BenchConfig import BenchConfig
    print(epochLengths(BenchConfig(mix='1:0.5,100:0.5'), 0, 10))
