import constants as _C
from harness.Scenario import Scenario

## sweep points as multiples of the FIFO P99 when no explicit SLOs are given
DEFAULT_SLO_FACTORS = [0.5, 1, 1.5, 2, 4]

class SloSweep(Scenario):
    NAME = 'slo'

    def sweepSlos(self, baselineP99):
        if self.cfg.sweepValues:
            return sorted(self.cfg.sweepValues)
        return [int(f * baselineP99) for f in DEFAULT_SLO_FACTORS]

    def run(self):
        fifo, _ = self.runLock('mcs')
        baselineP99 = fifo.p99()
        base = fifo.throughput['overall']

        points = []
        report = None
        for slo in self.sweepSlos(baselineP99):
            report, _ = self.runLock('asl', cfg=self.cfg.derive(sloNs=slo))
            self.check(report, baselineP99)
            points.append({
                'sloNs': slo,
                'throughput': report.throughput['overall'],
                'bigThroughput': report.throughput['big'],
                'littleThroughput': report.throughput['little'],
                'p99': report.p99(),
                'littleP99': report.p99(_C.CLASS_LITTLE),
                'violationFraction': report.violationFraction,
                'speedupVsMcs': report.throughput['overall'] / base if base else None
            })

        ## the largest SLO carries the sweep
        report.points = points
        report.baselines['mcs'] = fifo.summary()
        return report
