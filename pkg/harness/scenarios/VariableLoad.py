import constants as _C
from harness.LatencyRecorder import nearestRank
from harness.Scenario import Scenario
from utils.Tools import _info

class VariableLoad(Scenario):
    """Epoch length changes in phases (x1, x128, x1, random, x1024) while the
    SLO stays fixed. The reorderable lock is compared with FIFO phase by phase.
    """
    NAME = 'variable'

    def __init__(self, cfg, profile, outputDir = None, phases = None):
        super().__init__(cfg, profile, outputDir)
        self.phases = _C.VARIABLE_LOAD_PHASES if phases is None else phases
        self.durationNs = int(cfg.durationS * _C.NS_PER_S)

    def phaseBounds(self):
        """[(name, multiplier, startNs, endNs)] over the run."""
        bounds = []
        start = 0
        total = sum(share for _, _, share in self.phases)
        for i, (name, multiplier, share) in enumerate(self.phases):
            end = start + int(self.durationNs * share / total)
            if i == len(self.phases) - 1:
                end = self.durationNs
            bounds.append((name, multiplier, start, end))
            start = end
        return bounds

    def phaseAt(self, elapsedNs):
        for phase in self.phaseBounds():
            if elapsedNs < phase[3]:
                return phase
        return self.phaseBounds()[-1]

    def lengthOf(self, worker, elapsedNs):
        _, multiplier, _, _ = self.phaseAt(elapsedNs)
        if multiplier is None:
            multiplier = worker.rng.choice(_C.RANDOM_PHASE_MULTIPLIERS)
        return self.cfg.csNs * multiplier

    @staticmethod
    def samplesBetween(result, startNs, endNs):
        return [lat for w in result.workers for (t, lat, _, _) in w.series if startNs <= t < endNs]

    def run(self):
        fifo, fifoResult = self.runLock('mcs', lengthFn=self.lengthOf, trackSeries=True)
        bounds = self.phaseBounds()

        cfg = self.cfg
        if cfg.sloNs is None:
            _, _, s, e = bounds[0]
            cfg = cfg.derive(sloNs=self.achievableSlo(nearestRank(self.samplesBetween(fifoResult, s, e), 99)))
            _info("no SLO given, using {}ns from the first FIFO phase".format(cfg.sloNs))

        report, result = self.runLock('asl', cfg=cfg, lengthFn=self.lengthOf, trackSeries=True)
        report.baselines['mcs'] = fifo.summary()

        for name, multiplier, start, end in bounds:
            ## last third of the phase, after the window has had time to adapt
            tail = start + 2 * (end - start) // 3
            asl = self.samplesBetween(result, tail, end)
            base = self.samplesBetween(fifoResult, tail, end)
            whole = self.samplesBetween(result, start, end)
            aslP99 = nearestRank(asl, 99) if asl else None
            fifoP99 = nearestRank(base, 99) if base else None
            report.points.append({
                'phase': name,
                'multiplier': multiplier if multiplier is not None else 'random',
                'sloNs': cfg.sloNs,
                'aslP99LastThird': aslP99,
                'fifoP99LastThird': fifoP99,
                'p99Ratio': aslP99 / fifoP99 if aslP99 and fifoP99 else None,
                'violationFraction': sum(1 for x in whole if x > cfg.sloNs) / len(whole) if whole else None,
                'epochs': len(whole)
            })

        ## little-core windows over time
        series = []
        for w in result.workers:
            if w.coreClass.value == _C.CLASS_LITTLE:
                series.extend([t, window, w.tid] for (t, _, window, _) in w.series)
        report.windowSeries = sorted(series)
        return self.check(report)
