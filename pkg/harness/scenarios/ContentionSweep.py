from harness.Scenario import Scenario

class ContentionSweep(Scenario):
    """Non-critical work between acquisitions is swept; each point compares the
    reorderable lock without SLO against MCS, TAS and MCS on big threads only."""
    NAME = 'noncs'

    def sweepNonCs(self):
        if self.cfg.sweepValues:
            return sorted(self.cfg.sweepValues)
        cs = max(self.cfg.csNs, 1)
        return [0, cs, 4 * cs, 16 * cs, 64 * cs]

    def run(self):
        points = []
        report = None
        for nonCs in self.sweepNonCs():
            cfg = self.cfg.derive(nonCsNs=nonCs, sloNs=None)
            report, _ = self.runLock('asl', cfg=cfg)
            self.check(report)
            mcs, _ = self.runLock('mcs', cfg=cfg)
            tas, _ = self.runLock('tas', cfg=cfg)
            bigOnly, _ = self.runLock('mcs', cfg=cfg.derive(nLittle=0))

            asl = report.throughput['overall']
            point = {
                'nonCsNs': nonCs,
                'asl': asl,
                'mcs': mcs.throughput['overall'],
                'tas': tas.throughput['overall'],
                'mcsBigOnly': bigOnly.throughput['overall']
            }
            for name in ('mcs', 'tas', 'mcsBigOnly'):
                point['speedupVs' + name[0].upper() + name[1:]] = asl / point[name] if point[name] else None
            point['tasBigAcquisitions'] = tas.acquisitions['big']
            point['tasLittleAcquisitions'] = tas.acquisitions['little']
            points.append(point)

        report.points = points
        return report
