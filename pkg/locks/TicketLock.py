from locks.Atomics import AtomicInt, Backoff
from locks.Lock import Lock

class TicketLock(Lock):
    KIND = 'ticket'

    def __init__(self, observer = None, debug = None):
        super().__init__(observer, debug)
        self.nextTicket = AtomicInt(0)
        self.nowServing = AtomicInt(0)

    def isLockFree(self):
        return self.nextTicket.load() == self.nowServing.load()

    def _acquire(self, record):
        record.ticket = self.nextTicket.fetchAdd(1)
        self._noteEnqueue(record)
        backoff = Backoff()
        while self.nowServing.load() != record.ticket:
            backoff.pause()

    def _tryAcquire(self, record):
        serving = self.nowServing.load()
        if self.nextTicket.compareAndSet(serving, serving + 1):
            record.ticket = serving
            return True
        return False

    def _release(self, record):
        ## only the holder writes nowServing
        self.nowServing.store(record.ticket + 1)
