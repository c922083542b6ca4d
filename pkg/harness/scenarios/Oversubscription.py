from harness.Scenario import Scenario
from reorderable.ReorderableLock import STANDBY_SLEEP, STANDBY_SPIN

class Oversubscription(Scenario):
    """More runnable threads than cores. Standby competitors sleep and the
    inner lock is the OS mutex; the OS mutex alone is the baseline.

    The spinning standby over a queue lock is run too and only reported.
    """
    NAME = 'oversub'

    def run(self):
        cfg = self.cfg.derive(oversubscription=max(2, self.cfg.oversubscription))

        mutex, _ = self.runLock('mutex', cfg=cfg)
        report, _ = self.runLock('asl', cfg=cfg, inner='mutex', standby=STANDBY_SLEEP)
        degraded, _ = self.runLock('asl', cfg=cfg, inner='mcs', standby=STANDBY_SPIN)

        report.baselines['mutex'] = mutex.summary()
        report.baselines['spinStandbyMcs'] = degraded.summary()
        report.points = [
            dict(mutex.summary(), configuration='mutex'),
            dict(report.summary(), configuration='asl sleep-standby + mutex'),
            dict(degraded.summary(), configuration='asl spin-standby + mcs')
        ]
        return self.check(report)
