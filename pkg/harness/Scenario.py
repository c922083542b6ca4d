import importlib
import time

from amp.CoreType import CoreTypeMap
from asl.Asl import Asl
from asl.AslMutex import AslMutex
from asl.SloConfig import SloConfig
from harness.BenchReport import BenchReport
from harness.Evaluator import writeErrorLedger
from harness.ReportChecks import ReportChecks
from harness.Workload import Workload
from utils.Config import Config
from utils.Tools import _warn, _pr
import constants as _C

class Scenario:
    """Base of every benchmark scenario; subclasses implement run() -> BenchReport."""
    NAME = None

    def __init__(self, cfg, profile, outputDir = None):
        self.overallTimeStart = time.time()
        self.cfg = cfg
        self.profile = profile
        self.outputDir = _C.OUTPUT_DIR if outputDir is None else outputDir
        self.workerErrors = 0

        print('PREPARING -- ' + self.label())

    def label(self):
        return type(self).__name__.upper() + '::' + self.cfg.lock

    def run(self):
        raise NotImplementedError

    def completed(self):
        timespent = round(time.time() - self.overallTimeStart, 3)
        print('\033[1;42mCOMPLETED\033[0m -- ' + self.label() + ' (' + str(timespent) + 's)')

    @staticmethod
    def getLockClass(kind):
        module, className = Config.LOCK_KINDS[kind]
        return getattr(importlib.import_module(module), className)

    def buildLocks(self, kind, cfg, coreTypeMap, inner = None, standby = None):
        """Returns (locks, runtime); runtime is None for non-SLO locks."""
        if kind == 'asl':
            runtime = Asl(SloConfig.fromConfig(pct=cfg.pct), coreTypeMap)
            locks = [AslMutex(runtime=runtime, inner=inner or cfg.inner, standby=standby or cfg.standby) for _ in range(cfg.nested)]
            return locks, runtime

        LockClass = Scenario.getLockClass(kind)
        return [LockClass() for _ in range(cfg.nested)], None

    def runLock(self, kind, cfg = None, lengthFn = None, body = None, trackSeries = False, inner = None, standby = None):
        cfg = self.cfg if cfg is None else cfg
        ctm = CoreTypeMap.fromConfig(emulation=True)
        locks, runtime = self.buildLocks(kind, cfg, ctm, inner, standby)

        _pr("running {} with {} big / {} little threads for {}s".format(kind, cfg.nBig * cfg.oversubscription, cfg.nLittle * cfg.oversubscription, cfg.durationS))
        workload = Workload(cfg, locks[0], self.profile, runtime=runtime, coreTypeMap=ctm, locks=locks,
                            lengthFn=lengthFn, body=body, trackSeries=trackSeries)
        result = workload.run()
        if result.errors:
            self.workerErrors += len(result.errors)
            writeErrorLedger(result.errors, self.outputDir)
            _warn("{} worker(s) failed under {}, see {}/{}".format(len(result.errors), kind, self.outputDir, _C.ERROR_FILENAME))

        report = BenchReport.build(self.NAME, kind, cfg, result, self.profile, float(Config.get('warmupFraction', 0.1)))
        return report, result

    def check(self, report, baselineP99 = None):
        checks = ReportChecks(report, baselineP99)
        report.checks.update(checks.run(self.outputDir))
        return report

    def achievableSlo(self, baselineP99):
        ## smallest SLO the checks treat as achievable
        return int(float(Config.get('achievableFactor', 1.5)) * baselineP99)
