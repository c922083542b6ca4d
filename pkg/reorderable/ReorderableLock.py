import time

from amp.Clock import nowNs
from locks.Atomics import Backoff
from locks.FifoQueueLock import FifoQueueLock
from utils.Config import Config
from utils.Errors import ConfigurationError

OBSERVED_FREE = 'observed_free'
EXPIRED = 'expired'

STANDBY_SPIN = 'spin'
STANDBY_SLEEP = 'sleep'

class ReorderableLock:
    """Bounded reordering on top of an unmodified FIFO lock.

    A standby competitor stays out of the inner queue until it sees the lock
    free or its window runs out, then enqueues like everyone else. There is no
    secondary queue: standby competitors enqueue at individually computed times.
    """

    def __init__(self, inner = None, thresholdNs = None, maxWindowNs = None, standby = STANDBY_SPIN, standbySleepNs = None):
        self.inner = FifoQueueLock() if inner is None else inner
        self.thresholdNs = Config.get('thresholdNs', 200) if thresholdNs is None else int(thresholdNs)
        self.maxWindowNs = Config.get('maxWindowNs', 100 * 1000 * 1000) if maxWindowNs is None else int(maxWindowNs)
        self.standby = standby
        self.standbySleepNs = Config.get('standbySleepNs', 50 * 1000) if standbySleepNs is None else int(standbySleepNs)

        if self.thresholdNs <= 0:
            raise ConfigurationError("thresholdNs must be > 0, got {}".format(self.thresholdNs))
        if self.maxWindowNs < self.thresholdNs:
            raise ConfigurationError("maxWindowNs {} is below thresholdNs {}".format(self.maxWindowNs, self.thresholdNs))
        if standby not in (STANDBY_SPIN, STANDBY_SLEEP):
            raise ConfigurationError("standby mode must be spin|sleep, got {}".format(standby))

    def newRecord(self, coreClass = None):
        return self.inner.newRecord(coreClass)

    def isLockFree(self):
        return self.inner.isLockFree()

    def lockImmediately(self, record):
        return self.inner.acquire(record)

    def lockReorder(self, record, windowNs, trace = None):
        if windowNs < 0:
            raise ValueError("windowNs must be >= 0")

        if windowNs < self.thresholdNs or self.inner.isLockFree():
            if trace is not None:
                trace.startNs = trace.enqueuedAt = nowNs()
                trace.reason = OBSERVED_FREE if windowNs >= self.thresholdNs else None
            return self.inner.acquire(record)

        start = nowNs()
        if trace is not None:
            trace.startNs = start
        self.standbyWait(start + windowNs, trace)
        if trace is not None:
            trace.enqueuedAt = nowNs()
        return self.inner.acquire(record)

    def lockEventually(self, record, trace = None):
        return self.lockReorder(record, self.maxWindowNs, trace)

    def standbyWait(self, windowEnd, trace = None):
        """Poll the lock at iteration counts 1, 2, 4, 8, ... until free or windowEnd."""
        cnt = 0
        nextCheck = 1
        if trace is not None:
            trace.windowEndNs = windowEnd
        reason = EXPIRED
        backoff = Backoff()
        while True:
            now = nowNs()
            if now >= windowEnd:
                break
            if cnt == nextCheck:
                free = self.inner.isLockFree()
                if trace is not None:
                    trace.addPoll(cnt, now, free)
                if free:
                    reason = OBSERVED_FREE
                    break
                nextCheck <<= 1
            cnt += 1
            self._relax(backoff)

        if trace is not None:
            trace.iterations = cnt
            trace.reason = reason
        return reason

    def unlock(self, record):
        self.inner.release(record)

    def tryLock(self, record):
        return self.inner.tryAcquire(record)

    def _relax(self, backoff):
        if self.standby == STANDBY_SLEEP:
            time.sleep(self.standbySleepNs / 1e9)
        else:
            backoff.pause()
