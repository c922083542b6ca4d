import threading
from collections import deque

from amp.CoreType import CoreClass
from locks.Atomics import Backoff
from locks.Lock import Lock
from utils.Config import Config

class BatchingProportionalLock(Lock):
    """Static proportional policy: at most batchRatio big grants before one little grant.

    Two FIFO sub-queues (big, little) and a grant counter. The counter only
    decides between classes when both sub-queues have waiters; a little grant
    resets it.
    """
    KIND = 'proportional'

    def __init__(self, observer = None, debug = None, batchRatio = None, coreTypeMap = None):
        super().__init__(observer, debug)
        self.batchRatio = Config.get('batchRatio', 10) if batchRatio is None else int(batchRatio)
        if self.batchRatio < 1:
            raise ValueError("batchRatio must be a positive integer, got {}".format(self.batchRatio))
        self.coreTypeMap = coreTypeMap
        self.bigStreak = 0
        self.grants = {CoreClass.BIG: 0, CoreClass.LITTLE: 0}
        self._guard = threading.Lock()
        self._held = False
        self._queues = {CoreClass.BIG: deque(), CoreClass.LITTLE: deque()}

    def isLockFree(self):
        return not self._held

    def _classOf(self, record):
        if record.coreClass is None:
            if self.coreTypeMap is not None:
                record.coreClass = self.coreTypeMap.classifyCurrentCore()
            else:
                record.coreClass = CoreClass.BIG
        else:
            record.coreClass = CoreClass.parse(record.coreClass)
        return record.coreClass

    def _account(self, coreClass):
        self.grants[coreClass] += 1
        if coreClass is CoreClass.BIG:
            self.bigStreak += 1
        else:
            self.bigStreak = 0

    def _acquire(self, record):
        cls = self._classOf(record)
        with self._guard:
            self._noteEnqueue(record)
            if not self._held and not self._queues[CoreClass.BIG] and not self._queues[CoreClass.LITTLE]:
                self._held = True
                self._account(cls)
                return
            record.locked = True
            self._queues[cls].append(record)

        backoff = Backoff()
        while record.locked:
            backoff.pause()

    def _tryAcquire(self, record):
        cls = self._classOf(record)
        with self._guard:
            if self._held:
                return False
            self._held = True
            self._account(cls)
            return True

    def _pickNext(self):
        big = self._queues[CoreClass.BIG]
        little = self._queues[CoreClass.LITTLE]
        if big and little:
            if self.bigStreak < self.batchRatio:
                return big.popleft()
            return little.popleft()
        if big:
            return big.popleft()
        if little:
            return little.popleft()
        return None

    def _release(self, record):
        with self._guard:
            successor = self._pickNext()
            if successor is None:
                self._held = False
                return
            self._account(successor.coreClass)
            successor.locked = False
