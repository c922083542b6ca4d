import importlib

from asl.Asl import getRuntime
from locks.Lock import Lock
from reorderable.ReorderableLock import ReorderableLock, STANDBY_SPIN
from utils.Config import Config

class AslMutex(Lock):
    """A reorderable lock driven by the SLO runtime, behind the common lock interface.

    Nested use of several AslMutex inside one epoch is fine: they all read the
    same epoch window.
    """
    KIND = 'asl'

    def __init__(self, observer = None, debug = None, runtime = None, inner = 'mcs', standby = STANDBY_SPIN):
        super().__init__(None, debug)
        self.runtime = getRuntime() if runtime is None else runtime
        innerLock = AslMutex.buildInner(inner, debug)
        self.reorderable = ReorderableLock(
            inner=innerLock,
            thresholdNs=self.runtime.cfg.thresholdNs,
            maxWindowNs=self.runtime.cfg.maxWindowNs,
            standby=standby
        )
        self.setObserver(observer)

    @staticmethod
    def buildInner(kind, debug = None):
        if not isinstance(kind, str):
            return kind
        module, className = Config.LOCK_KINDS[kind]
        LockClass = getattr(importlib.import_module(module), className)
        return LockClass(debug=debug)

    def setObserver(self, observer):
        self.observer = observer
        self.reorderable.inner.setObserver(observer)

    def newRecord(self, coreClass = None):
        return self.reorderable.newRecord(coreClass)

    def isLockFree(self):
        return self.reorderable.isLockFree()

    def acquire(self, record = None, coreClass = None, trace = None):
        if record is None:
            record = self.newRecord(coreClass)
        elif coreClass is not None:
            record.coreClass = coreClass
        return self.runtime.aslLock(self.reorderable, record, trace)

    def tryAcquire(self, record = None):
        if record is None:
            record = self.newRecord()
        if self.runtime.aslTrylock(self.reorderable, record):
            return record
        return None

    def release(self, record):
        self.runtime.aslUnlock(self.reorderable, record)
