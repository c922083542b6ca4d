import threading
from contextlib import contextmanager

from amp.Clock import nowNs
from utils.Config import Config
from utils.Errors import LockContractError

class WaitRecord:
    """Caller-owned waiting record, reusable across acquisitions.

    The record doubles as the acquisition token: release() takes the record
    that acquired the lock.
    """
    __slots__ = ('locked', 'next', 'ticket', 'coreClass', 'threadId',
                 'enqueueSeq', 'acquireSeq', 'enqueuedAt', 'acquiredAt')

    def __init__(self, coreClass = None):
        self.coreClass = coreClass
        self.reset()

    def reset(self):
        self.locked = False
        self.next = None
        self.ticket = -1
        self.threadId = None
        self.enqueueSeq = -1
        self.acquireSeq = -1
        self.enqueuedAt = 0
        self.acquiredAt = 0


class Lock:
    """Shared acquisition interface of every lock kind.

    Subclasses implement _acquire/_release/_tryAcquire/isLockFree and call
    _noteEnqueue at the point their waiter joins the lock's order.
    """
    KIND = None

    def __init__(self, observer = None, debug = None):
        self.observer = observer
        self.debug = Config.get('DEBUG', False) if debug is None else debug
        self._holder = None

    def newRecord(self, coreClass = None):
        return WaitRecord(coreClass)

    def setObserver(self, observer):
        self.observer = observer

    def acquire(self, record = None, coreClass = None):
        if record is None:
            record = self.newRecord(coreClass)
        elif coreClass is not None:
            record.coreClass = coreClass
        record.threadId = threading.get_ident()
        self._acquire(record)
        self._noteAcquire(record)
        return record

    def tryAcquire(self, record = None):
        if record is None:
            record = self.newRecord()
        record.threadId = threading.get_ident()
        if not self._tryAcquire(record):
            return None
        self._noteEnqueue(record)
        self._noteAcquire(record)
        return record

    def release(self, record):
        if self.debug:
            if self._holder is not record:
                raise LockContractError("{} released by a record that does not hold it".format(type(self).__name__))
            self._holder = None
        self._release(record)

    @contextmanager
    def held(self, record = None, coreClass = None):
        token = self.acquire(record, coreClass)
        try:
            yield token
        finally:
            self.release(token)

    def isLockFree(self):
        raise NotImplementedError

    def _acquire(self, record):
        raise NotImplementedError

    def _release(self, record):
        raise NotImplementedError

    def _tryAcquire(self, record):
        raise NotImplementedError

    def _noteEnqueue(self, record):
        record.enqueuedAt = nowNs()
        if self.observer is not None:
            self.observer.onEnqueue(record)

    def _noteAcquire(self, record):
        record.acquiredAt = nowNs()
        if self.debug:
            self._holder = record
        if self.observer is not None:
            self.observer.onAcquire(record)
