from harness.Scenario import Scenario

class Bench(Scenario):
    """All threads repeat the same epoch against one lock.

    An SLO-bounded run also measures the FIFO lock in the same configuration,
    which decides whether the SLO counts as achievable.
    """
    NAME = 'fixed'

    def run(self):
        baselineP99 = None
        baseline = None
        if self.cfg.lock == 'asl' and self.cfg.sloNs is not None and self.cfg.baseline:
            baseline, _ = self.runLock('mcs')
            baselineP99 = baseline.p99()

        report, _ = self.runLock(self.cfg.lock)
        if baseline is not None:
            report.baselines['mcs'] = baseline.summary()
        return self.check(report, baselineP99)
