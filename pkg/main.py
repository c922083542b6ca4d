import os
import sys
import time

from utils.Config import Config
from utils.ArguParser import ArguParser
from utils.Errors import AmpLockError
from utils.Tools import _info, _warn
import constants as _C

def applyCliOverrides(_cli_options):
    ## CLI flags win over file and environment
    if _cli_options.get('pct') is not None:
        Config.set('pct', _cli_options['pct'])
    if _cli_options.get('emulate_a') is not None:
        Config.set('inflation', _cli_options['emulate_a'])

def main(argv = None):
    scriptStartTime = time.time()
    _cli_options = ArguParser.Load(argv)

    debugFlag = _cli_options['debug']
    DEBUG = True if debugFlag in _C.CLI_TRUE_KEYWORD_ARRAY or str(debugFlag).lower() in _C.CLI_TRUE_KEYWORD_ARRAY or debugFlag is True else False

    Config.init()
    command = _cli_options['command']
    try:
        if _cli_options['config']:
            Config.loadFile(_cli_options['config'])
        Config.loadEnv()
        if DEBUG:
            Config.set('DEBUG', True)
        applyCliOverrides(_cli_options)

        ## imported after Config is settled, lock defaults read it
        from Harness import Harness
        from harness.Reporter import Reporter

        if command == 'model':
            rows = Harness.runModel(_cli_options)
            Reporter.exportData(rows, _cli_options['format'], Harness.outputPath(_cli_options, 'model'))
        elif command == 'simulate':
            out = Harness.runSimulation(_cli_options)
            print("Throughput: {:.6f} (steady {:.6f}) | utilization {:.6f} | violations {}/{}".format(
                out['throughput'], out['steadyThroughput'], out['utilization'], out['violations'], out['epochs']))
            Reporter.exportData(out, _cli_options['format'], Harness.outputPath(_cli_options, 'simulate'))
        else:
            from amp.CoreType import CoreTypeMap, topology
            from amp.Emulation import calibrateDelay
            from harness.BenchConfig import BenchConfig

            _cli_options['scenario'] = Harness.scenarioFor(command, _cli_options)
            cfg = BenchConfig.fromOptions(_cli_options)
            coreTypeMap = CoreTypeMap.fromConfig(emulation=True)
            if cfg.pin and coreTypeMap.mapping:
                coreTypeMap.validate()

            _info("topology: {}".format(topology()), alwaysPrint=True)
            profile = calibrateDelay(cfg.inflation)

            path = Harness.outputPath(_cli_options, cfg.scenario, cfg.lock)
            report = Harness.runScenario(cfg, profile, os.path.dirname(os.path.abspath(path)))
            Harness.generateOutput(report, _cli_options['format'], path)

            print("Completed epochs: {} | Throughput (epochs/s): {:.1f} | P99 (ns): {}".format(
                report.completed, report.throughput.get('overall', 0.0), report.p99()))
    except AmpLockError as e:
        _warn(str(e))
        return e.EXIT_CODE

    scriptTimeSpent = round(time.time() - scriptStartTime, 3)
    print("@ Thank you for using {}, script spent {}s to complete @".format(Config.ADVISOR['TITLE'], scriptTimeSpent))
    return 0

if __name__ == "__main__":
    sys.exit(main())
