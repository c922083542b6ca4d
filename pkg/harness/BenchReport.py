from dataclasses import dataclass, field, asdict
from typing import Optional

import constants as _C
from amp.CoreType import CoreClass, topology
from harness.LatencyRecorder import LatencyRecorder
from utils.Tools import jainsFairness


@dataclass
class BenchReport:
    """Outcome of one scenario run, in JSON-native types only."""

    scenario: str = ''
    lock: str = ''
    config: dict = field(default_factory=dict)
    topology: dict = field(default_factory=dict)
    calibration: dict = field(default_factory=dict)
    elapsedS: float = 0.0
    completed: int = 0
    perThreadCounts: list = field(default_factory=list)
    ## latency samples taken before warm-up trimming
    recorded: int = 0
    ## epochs/s per class, overall is the sum of the classes
    throughput: dict = field(default_factory=dict)
    percentiles: dict = field(default_factory=dict)
    cdf: dict = field(default_factory=dict)
    sloNs: Optional[int] = None
    violationFraction: Optional[float] = None
    acquisitions: dict = field(default_factory=dict)
    fairness: float = 1.0
    windowSeries: list = field(default_factory=list)
    points: list = field(default_factory=list)
    baselines: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    errors: int = 0

    @staticmethod
    def build(scenario, lockKind, cfg, result, profile = None, warmupFraction = 0.1):
        """Aggregate per-worker recorders of a WorkloadResult.

        The first warmupFraction of every worker's samples is dropped before
        percentiles are taken; throughput counts every completed epoch.
        """
        report = BenchReport(scenario=scenario, lock=lockKind, config=cfg.toDict(), topology=topology())
        if profile is not None:
            report.calibration = profile.toDict()
        report.elapsedS = result.elapsedNs / _C.NS_PER_S
        report.completed = result.completed
        report.perThreadCounts = [w.count for w in result.workers]
        report.sloNs = cfg.sloNs
        report.errors = len(result.errors)
        report.recorded = sum(w.recorder.seen for w in result.workers)

        elapsed = max(report.elapsedS, 1e-9)
        byClass = {}
        for cls in (CoreClass.BIG, CoreClass.LITTLE):
            workers = result.ofClass(cls)
            count = sum(w.count for w in workers)
            report.throughput[cls.value] = count / elapsed
            report.acquisitions[cls.value] = count * cfg.nested
            for w in workers:
                w.recorder.trimWarmup(warmupFraction)
            byClass[cls.value] = LatencyRecorder.merge([w.recorder for w in workers], cls)
        report.throughput[_C.CLASS_OVERALL] = report.throughput[_C.CLASS_BIG] + report.throughput[_C.CLASS_LITTLE]
        byClass[_C.CLASS_OVERALL] = LatencyRecorder.merge(list(byClass.values()))

        for name, recorder in byClass.items():
            ## a class without threads keeps empty entries
            report.percentiles[name] = recorder.percentiles(_C.PERCENTILES)
            report.cdf[name] = recorder.cdf()

        if cfg.sloNs is not None:
            report.violationFraction = byClass[_C.CLASS_OVERALL].violationFraction(cfg.sloNs)
        report.fairness = jainsFairness(report.perThreadCounts)
        return report

    def p99(self, cls = _C.CLASS_OVERALL):
        return self.percentiles.get(cls, {}).get('p99')

    def summary(self):
        ## short dict used for sweep points and baselines
        return {
            'lock': self.lock,
            'throughput': self.throughput.get(_C.CLASS_OVERALL, 0.0),
            'p99': self.p99(),
            'violationFraction': self.violationFraction
        }

    def toDict(self):
        return asdict(self)
