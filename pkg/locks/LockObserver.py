import threading

from amp.CoreType import CoreClass
from locks.Atomics import AtomicInt

class LockObserver:
    """Per-acquisition bookkeeping for ordering and affinity tests.

    onAcquire runs while the observed lock is held, so acquire sequence
    numbers come out strictly increasing and gap-free.
    """

    def __init__(self):
        self._enqueueSeq = AtomicInt(0)
        self._acquireSeq = 0
        self._guard = threading.Lock()
        self.records = []

    def onEnqueue(self, record):
        record.enqueueSeq = self._enqueueSeq.fetchAdd(1)

    def onAcquire(self, record):
        record.acquireSeq = self._acquireSeq
        self._acquireSeq += 1
        entry = {
            'threadId': record.threadId,
            'coreClass': record.coreClass.value if isinstance(record.coreClass, CoreClass) else record.coreClass,
            'enqueueSeq': record.enqueueSeq,
            'acquireSeq': record.acquireSeq,
            'enqueuedAt': record.enqueuedAt,
            'acquiredAt': record.acquiredAt
        }
        with self._guard:
            self.records.append(entry)

    def enqueueCount(self):
        return self._enqueueSeq.load()

    def acquireCount(self):
        return len(self.records)

    def acquireOrder(self):
        return [r['threadId'] for r in sorted(self.records, key=lambda r: r['acquireSeq'])]

    def enqueueOrder(self):
        return [r['threadId'] for r in sorted(self.records, key=lambda r: r['enqueueSeq'])]

    def isFifo(self):
        seqs = [r['enqueueSeq'] for r in sorted(self.records, key=lambda r: r['acquireSeq'])]
        return seqs == sorted(seqs)

    def isGapFree(self):
        seqs = sorted(r['acquireSeq'] for r in self.records)
        return seqs == list(range(len(seqs)))

    def countsByClass(self):
        counts = {}
        for r in self.records:
            counts[r['coreClass']] = counts.get(r['coreClass'], 0) + 1
        return counts

    def classSequence(self):
        return [r['coreClass'] for r in sorted(self.records, key=lambda r: r['acquireSeq'])]
