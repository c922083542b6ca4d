import threading

from locks.Lock import Lock

class OsMutexLock(Lock):
    """The interpreter's native blocking lock; waiters park in the OS instead of spinning."""
    KIND = 'mutex'

    def __init__(self, observer = None, debug = None):
        super().__init__(observer, debug)
        self.mutex = threading.Lock()

    def isLockFree(self):
        return not self.mutex.locked()

    def _acquire(self, record):
        self._noteEnqueue(record)
        self.mutex.acquire()

    def _tryAcquire(self, record):
        return self.mutex.acquire(blocking=False)

    def _release(self, record):
        self.mutex.release()
