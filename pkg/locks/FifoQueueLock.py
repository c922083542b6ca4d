from locks.Atomics import AtomicReference, Backoff, cpuRelax
from locks.Lock import Lock

class FifoQueueLock(Lock):
    """MCS-style queue lock: waiters spin on their own record, linked to successors.

    Acquisition order equals the order records were swapped into tail.
    """
    KIND = 'mcs'

    def __init__(self, observer = None, debug = None):
        super().__init__(observer, debug)
        self.tail = AtomicReference(None)

    def isLockFree(self):
        return self.tail.load() is None

    def _acquire(self, record):
        record.next = None
        record.locked = True
        pred = self.tail.exchange(record)
        self._noteEnqueue(record)
        if pred is None:
            record.locked = False
            return
        pred.next = record
        backoff = Backoff()
        while record.locked:
            backoff.pause()

    def _tryAcquire(self, record):
        record.next = None
        record.locked = False
        return self.tail.compareAndSet(None, record)

    def _release(self, record):
        successor = record.next
        if successor is None:
            if self.tail.compareAndSet(record, None):
                return
            ## a successor swapped tail but has not linked itself yet
            while record.next is None:
                cpuRelax()
            successor = record.next
        record.next = None
        successor.locked = False

