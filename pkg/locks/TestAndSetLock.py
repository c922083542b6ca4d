from locks.Atomics import AtomicBool, Backoff
from locks.Lock import Lock

class TestAndSetLock(Lock):
    """Test-and-test-and-set spinlock with bounded exponential backoff.

    Whoever wins the swap holds the lock, no order.
    """
    KIND = 'tas'

    def __init__(self, observer = None, debug = None):
        super().__init__(observer, debug)
        self.state = AtomicBool(False)

    def isLockFree(self):
        return not self.state.load()

    def _acquire(self, record):
        self._noteEnqueue(record)
        backoff = Backoff()
        while True:
            if not self.state.load() and not self.state.testAndSet():
                return
            backoff.pause()

    def _tryAcquire(self, record):
        return not self.state.testAndSet()

    def _release(self, record):
        self.state.store(False)
