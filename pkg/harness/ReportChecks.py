import constants as _C
from harness.Evaluator import Evaluator
from utils.Config import Config

class ReportChecks(Evaluator):
    """Sanity and SLO checks on a finished BenchReport.

    results[name] = [1, detail] when the check passes, [-1, detail] otherwise.
    Checks that do not apply to the run record nothing.
    """

    def __init__(self, report, baselineP99 = None):
        super().__init__()
        self.report = report
        self.baselineP99 = baselineP99
        self.tolerance = float(Config.get('sloTolerance', 1.15))
        self.achievableFactor = float(Config.get('achievableFactor', 1.5))

    def sloAchievable(self):
        ## SLO counts as achievable from 1.5x the FIFO P99 of the same configuration
        slo = self.report.sloNs
        if slo is None or self.baselineP99 is None:
            return False
        return slo >= self.achievableFactor * self.baselineP99

    def _checkThroughputAccounting(self):
        r = self.report
        counted = sum(r.perThreadCounts)
        ok = counted == r.completed == r.recorded
        self.results['ThroughputAccounting'] = [1 if ok else -1, "per-thread {} / total {} / recorded {}".format(counted, r.completed, r.recorded)]

    def _checkClassThroughputSum(self):
        t = self.report.throughput
        overall = t.get(_C.CLASS_OVERALL, 0.0)
        diff = abs(overall - t.get(_C.CLASS_BIG, 0.0) - t.get(_C.CLASS_LITTLE, 0.0))
        ok = diff <= 1e-9 * max(1.0, overall)
        self.results['ClassThroughputSum'] = [1 if ok else -1, "difference {}".format(diff)]

    def _checkCdfShape(self):
        bad = []
        for cls, rows in self.report.cdf.items():
            if not rows:
                continue
            fractions = [f for _, f in rows]
            latencies = [x for x, _ in rows]
            if fractions != sorted(fractions) or latencies != sorted(latencies) or fractions[-1] != 1.0:
                bad.append(cls)
        self.results['CdfShape'] = [-1 if bad else 1, "malformed: {}".format(bad) if bad else "ok"]

    def _checkSloEnvelope(self):
        ## overall and little-class P99 both stay under the tolerance; no little samples, no little check
        if not self.sloAchievable():
            return
        p99 = self.report.p99()
        littleP99 = self.report.p99(_C.CLASS_LITTLE)
        limit = self.tolerance * self.report.sloNs
        ok = p99 is not None and p99 <= limit and (littleP99 is None or littleP99 <= limit)
        self.results['SloEnvelope'] = [1 if ok else -1, "P99 {} / little P99 {} vs limit {}".format(p99, littleP99, limit)]

    def _checkViolationFraction(self):
        if not self.sloAchievable() or self.report.violationFraction is None:
            return
        pct = self.report.config.get('pct', 99)
        limit = 2 * (100 - pct) / 100
        frac = self.report.violationFraction
        self.results['ViolationFraction'] = [1 if frac <= limit else -1, "{:.4f} vs limit {:.4f}".format(frac, limit)]

    def _checkAffinitySkew(self):
        ## report only: which class the lock favoured
        acq = self.report.acquisitions
        big, little = acq.get(_C.CLASS_BIG, 0), acq.get(_C.CLASS_LITTLE, 0)
        nBig = self.report.config.get('nBig', 0) or 1
        nLittle = self.report.config.get('nLittle', 0) or 1
        ratio = (big / nBig) / (little / nLittle) if little else None
        self.results['AffinitySkew'] = [1, "big {} / little {}, per-thread ratio {}".format(big, little, ratio)]
