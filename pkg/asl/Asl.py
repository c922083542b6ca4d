import threading
from contextlib import contextmanager

from amp.Clock import nowNs
from amp.CoreType import CoreClass, CoreTypeMap
from asl.EpochState import EpochTable, NO_EPOCH
from asl.SloConfig import SloConfig
from asl.Window import adjustWindow, seedUnit
from locks.Atomics import AtomicInt
from utils.Errors import EpochCapacityError, EpochRangeError, EpochStateError
from utils.Tools import _pr

class Asl:
    """SLO feedback runtime.

    Big-core callers enqueue immediately. Little-core callers stand by for the
    window of the epoch they are in, or for the maximum window outside any epoch.
    Windows live in thread-local epoch tables and only epochEnd changes them.
    """

    def __init__(self, cfg = None, coreTypeMap = None):
        self.cfg = SloConfig.fromConfig() if cfg is None else cfg
        self.coreTypeMap = CoreTypeMap() if coreTypeMap is None else coreTypeMap
        self._epochIds = AtomicInt(0)
        self._local = threading.local()

    def _table(self):
        table = getattr(self._local, 'table', None)
        if table is None:
            table = EpochTable(self.cfg.maxEpochs)
            self._local.table = table
        return table

    def _checkRange(self, epochId):
        if not isinstance(epochId, int) or epochId < 0 or epochId >= self.cfg.maxEpochs:
            raise EpochRangeError("epoch id {} outside [0, {})".format(epochId, self.cfg.maxEpochs))

    def nextEpochId(self):
        epochId = self._epochIds.fetchAdd(1)
        if epochId >= self.cfg.maxEpochs:
            raise EpochCapacityError("all {} epoch ids are taken".format(self.cfg.maxEpochs))
        return epochId

    def epochStart(self, epochId):
        self._checkRange(epochId)
        table = self._table()
        if table.currentEpochId != NO_EPOCH:
            raise EpochStateError("epoch {} is still open on this thread, nested epochs are not supported".format(table.currentEpochId))
        table.currentEpochId = epochId
        table[epochId].start = nowNs()
        return 0

    def epochEnd(self, epochId, requiredLatencyNs):
        """Close the epoch and feed its latency back into its window.

        Returns the measured latency in ns.
        """
        self._checkRange(epochId)
        table = self._table()
        if table.currentEpochId != epochId:
            raise EpochStateError("epochEnd({}) but the open epoch is {}".format(epochId, table.currentEpochId))

        state = table[epochId]
        latency = nowNs() - state.start
        try:
            if self.coreTypeMap.classifyCurrentCore() is not CoreClass.BIG:
                self._apply(state, latency, requiredLatencyNs)
        finally:
            state.start = None
            table.currentEpochId = NO_EPOCH
        return latency

    def observe(self, epochId, latencyNs, requiredLatencyNs):
        """Apply one latency sample to this thread's epoch state without timing it."""
        self._checkRange(epochId)
        state = self._table()[epochId]
        self._apply(state, latencyNs, requiredLatencyNs)
        return state.window

    def _apply(self, state, latency, slo):
        if state.unit == 0:
            state.unit = seedUnit(slo, self.cfg)
        state.window, state.unit = adjustWindow(state.window, state.unit, latency, slo, self.cfg)
        _pr("epoch latency {} slo {} -> window {} unit {}".format(latency, slo, state.window, state.unit))

    @contextmanager
    def epoch(self, epochId, requiredLatencyNs):
        self.epochStart(epochId)
        try:
            yield epochId
        finally:
            self.epochEnd(epochId, requiredLatencyNs)

    def currentEpochId(self):
        return self._table().currentEpochId

    def window(self, epochId):
        self._checkRange(epochId)
        return self._table()[epochId].window

    def unit(self, epochId):
        self._checkRange(epochId)
        return self._table()[epochId].unit

    def aslLock(self, mutex, record, trace = None):
        if self.coreTypeMap.classifyCurrentCore() is CoreClass.BIG:
            return mutex.lockImmediately(record)

        table = self._table()
        if table.currentEpochId == NO_EPOCH:
            return mutex.lockEventually(record, trace)
        return mutex.lockReorder(record, table[table.currentEpochId].window, trace)

    def aslTrylock(self, mutex, record):
        return mutex.tryLock(record) is not None

    def aslUnlock(self, mutex, record):
        mutex.unlock(record)


_runtime = None
_runtimeGuard = threading.Lock()

def getRuntime():
    """Process-global runtime, built from Config on first use."""
    global _runtime
    with _runtimeGuard:
        if _runtime is None:
            _runtime = Asl()
        return _runtime

def resetRuntime(runtime = None):
    global _runtime
    with _runtimeGuard:
        _runtime = runtime
