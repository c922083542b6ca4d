from harness.Scenario import Scenario
from utils.Tools import _info

class MixedLengths(Scenario):
    """Short and 100x longer epochs drawn at random from the configured mix
    (e.g. '1:0.5,100:0.5') under one SLO, against the FIFO lock."""
    NAME = 'mixed'

    def run(self):
        fifo, _ = self.runLock('mcs')
        baselineP99 = fifo.p99()

        cfg = self.cfg
        if cfg.sloNs is None:
            cfg = cfg.derive(sloNs=self.achievableSlo(baselineP99))
            _info("no SLO given, using {}ns".format(cfg.sloNs))

        report, _ = self.runLock('asl', cfg=cfg)
        report.baselines['mcs'] = fifo.summary()
        base = fifo.throughput.get('overall', 0.0)
        report.baselines['speedupVsMcs'] = report.throughput['overall'] / base if base else None
        return self.check(report, baselineP99)
