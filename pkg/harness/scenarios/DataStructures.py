from amp.Emulation import emulatedWork
from harness.DataStructures import Stack, SortedLinkedList, stackOp, listOp, conservation
from harness.Scenario import Scenario

class DataStructures(Scenario):
    """Lock-protected stack and sorted linked list, one operation per epoch.

    Each structure runs under the reorderable lock (no SLO unless given) and
    under MCS; the element count is checked against the per-worker operation
    counters after every run.
    """
    NAME = 'ds'

    def structures(self):
        if self.cfg.structure == 'both':
            return ['stack', 'list']
        return [self.cfg.structure]

    def runStructure(self, structure, kind):
        if structure == 'stack':
            shared = Stack()
            op = stackOp
            added, removed = 'push', 'pop'
        else:
            shared = SortedLinkedList()
            op = listOp
            added, removed = 'insert', 'remove'

        def body(worker, lengthNs):
            op(shared, worker)
            emulatedWork(lengthNs, worker.coreClass, self.profile)

        report, result = self.runLock(kind, body=body)
        ok, detail = conservation(result.workers, added, removed, len(shared))
        if structure == 'list' and not shared.isSorted():
            ok, detail = False, detail + ", list order broken"
        report.checks['Conservation'] = [1 if ok else -1, detail]
        return report, len(shared)

    def run(self):
        points = []
        report = None
        for structure in self.structures():
            mcs, mcsSize = self.runStructure(structure, 'mcs')
            report, size = self.runStructure(structure, self.cfg.lock)
            self.check(report)
            for r, finalSize in ((report, size), (mcs, mcsSize)):
                points.append({
                    'structure': structure,
                    'lock': r.lock,
                    'throughput': r.throughput['overall'],
                    'p99': r.p99(),
                    'bigAcquisitions': r.acquisitions['big'],
                    'littleAcquisitions': r.acquisitions['little'],
                    'finalSize': finalSize,
                    'conserved': r.checks['Conservation'][0] == 1
                })
            report.baselines['mcs:' + structure] = mcs.summary()

        report.points = points
        return report
