import importlib
import os

from harness.Reporter import Reporter
from model.Formulas import theoreticalThroughput, speedupUpperBound, alternatingThroughput
from model.SimConfig import SimConfig
from model.Simulator import simulate
from utils.Config import Config
from utils.Errors import CalibrationError, ConfigurationError, WorkerError
from utils.Tools import _info, parseIntList
import constants as _C

class Harness:
    ## CLI command => scenario id; bench and sweep pick theirs from flags
    COMMAND_SCENARIOS = {
        'ds': 'ds',
        'oversub': 'oversub'
    }

    def __init__(self):
        pass

    @staticmethod
    def scenarioFor(command, options):
        if command == 'bench':
            return options.get('scenario') or 'fixed'
        if command == 'sweep':
            return options.get('sweep') or 'slo'
        return Harness.COMMAND_SCENARIOS[command]

    @staticmethod
    def getScenarioClassDynamically(scenarioId):
        # e.g: harness.scenarios.SloSweep.SloSweep
        if scenarioId not in Config.SCENARIOS:
            raise ConfigurationError("unknown scenario '{}'".format(scenarioId))
        module, className = Config.SCENARIOS[scenarioId]
        return getattr(importlib.import_module(module), className)

    @staticmethod
    def getLockClassDynamically(kind):
        if kind not in Config.LOCK_KINDS:
            raise ConfigurationError("unknown lock '{}'".format(kind))
        module, className = Config.LOCK_KINDS[kind]
        return getattr(importlib.import_module(module), className)

    @staticmethod
    def runScenario(cfg, profile, outputDir = None):
        if profile is None:
            raise CalibrationError("no emulation profile, run calibrateDelay before any scenario")
        ScenarioClass = Harness.getScenarioClassDynamically(cfg.scenario)
        scenario = ScenarioClass(cfg, profile, outputDir)
        try:
            report = scenario.run()
        finally:
            scenario.completed()
        report.errors = scenario.workerErrors
        return report

    @staticmethod
    def runModel(options):
        """Closed-form throughput for x = 0..xmax next to the simulated one."""
        a = options.get('emulate_a') or float(Config.get('inflation', 4.7))
        rows = []
        for x in range(int(options.get('xmax') or 32) + 1):
            sim = simulate(SimConfig(nBig=1, nLittle=1, a=a, policy='proportional', batchRatio=x, horizon=50 * (x + 2)))
            rows.append({
                'x': x,
                'a': a,
                'theoreticalThroughput': theoreticalThroughput(x, a),
                'simulatedThroughput': sim.steadyThroughput,
                'alternatingThroughput': alternatingThroughput(a),
                'speedupUpperBound': speedupUpperBound(a)
            })
        return rows

    @staticmethod
    def buildSimConfig(options):
        kwargs = {}
        mapping = {'big': 'nBig', 'little': 'nLittle', 'emulate_a': 'a', 'cs_ns': 'csBig',
                   'noncs_ns': 'nonCs', 'horizon': 'horizon', 'seed': 'seed', 'pct': 'pct'}
        for opt, attr in mapping.items():
            if options.get(opt) is not None:
                kwargs[attr] = options[opt]
        kwargs['latencyModel'] = options.get('latency_model') or 'measured'
        if options.get('step'):
            step = parseIntList(options['step'])
            if len(step) != 3:
                raise ConfigurationError("--step expects threshold,below,above")
            kwargs['stepThreshold'], kwargs['stepBelow'], kwargs['stepAbove'] = step
        if kwargs['latencyModel'] == 'trace':
            kwargs['latencies'] = parseIntList(options.get('values'))
        cfg = SimConfig(**kwargs)
        return cfg.applyPolicy(options.get('policy') or 'fifo')

    @staticmethod
    def runSimulation(options):
        cfg = Harness.buildSimConfig(options)
        result = simulate(cfg)
        out = result.toDict()
        out['config'] = cfg.toDict()
        return out

    @staticmethod
    def outputPath(options, name, lock = None):
        if options.get('out'):
            return options['out']
        fmt = options.get('format') or 'json'
        base = name if lock is None else name + '-' + lock
        return os.path.join(_C.OUTPUT_DIR, base + '.' + fmt)

    @staticmethod
    def generateOutput(report, fmt, path):
        reporter = Reporter()
        reporter.exportReport(report, fmt, path)

        failed = [k for k, v in report.checks.items() if v[0] == -1]
        if failed:
            _info("checks failed: {}".format(', '.join(failed)), alwaysPrint=True)
        if report.errors:
            raise WorkerError("{} worker(s) failed, tracebacks in {}".format(report.errors, os.path.join(os.path.dirname(os.path.abspath(path)), _C.ERROR_FILENAME)))
        return path
