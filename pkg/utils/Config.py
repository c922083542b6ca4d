import json
import os
import traceback

from utils.Errors import ConfigurationError

class Config:

    ADVISOR = {
        'TITLE': 'AmpLock',
        'VERSION': '1.0.0',
        'LAST_UPDATE': '17-Oct-2026'
    }

    ## Library and harness defaults, overridable by config file, environment and CLI
    ASL = {
        'pct': 99,
        'minUnitNs': 100,
        'maxWindowNs': 100 * 1000 * 1000,
        'thresholdNs': 200,
        'maxEpochs': 64,
        'batchRatio': 10,
        'inflation': 4.7,
        'standbySleepNs': 50 * 1000,
        'warmupFraction': 0.1,
        'achievableFactor': 1.5,
        'sloTolerance': 1.15,
        'coreTypes': None
    }

    ## lock kind => [module, class]
    LOCK_KINDS = {
        'mcs': ['locks.FifoQueueLock', 'FifoQueueLock'],
        'tas': ['locks.TestAndSetLock', 'TestAndSetLock'],
        'ticket': ['locks.TicketLock', 'TicketLock'],
        'proportional': ['locks.BatchingProportionalLock', 'BatchingProportionalLock'],
        'mutex': ['locks.OsMutexLock', 'OsMutexLock'],
        'asl': ['asl.AslMutex', 'AslMutex']
    }

    ## scenario id => [module, class]
    SCENARIOS = {
        'fixed': ['harness.scenarios.Bench', 'Bench'],
        'variable': ['harness.scenarios.VariableLoad', 'VariableLoad'],
        'mixed': ['harness.scenarios.MixedLengths', 'MixedLengths'],
        'slo': ['harness.scenarios.SloSweep', 'SloSweep'],
        'noncs': ['harness.scenarios.ContentionSweep', 'ContentionSweep'],
        'oversub': ['harness.scenarios.Oversubscription', 'Oversubscription'],
        'ds': ['harness.scenarios.DataStructures', 'DataStructures']
    }

    ## environment variable => [key, type]
    ENV_MAPPING = {
        'ASL_PCT': ['pct', int],
        'ASL_MIN_UNIT_NS': ['minUnitNs', int],
        'ASL_MAX_WINDOW_NS': ['maxWindowNs', int],
        'ASL_THRESHOLD_NS': ['thresholdNs', int],
        'ASL_MAX_EPOCHS': ['maxEpochs', int],
        'ASL_EMULATE_A': ['inflation', float],
        'ASL_BATCH_RATIO': ['batchRatio', int],
        'ASL_CORE_MAP': ['coreTypes', str]
    }

    @staticmethod
    def init():
        global cache
        cache = {}
        for key, val in Config.ASL.items():
            cache[key] = val
        cache['DEBUG'] = False

    @staticmethod
    def set(key, val):
        cache[key] = val

    @staticmethod
    def get(key, defaultValue = False):
        DEBUG = cache.get('DEBUG', False)
        if key in cache:
            return cache[key]

        if defaultValue == False:
            if DEBUG:
                traceback.print_exc()

        return defaultValue

    @staticmethod
    def retrieveAllCache():
        return cache

    @staticmethod
    def loadFile(path):
        if not os.path.exists(path):
            raise ConfigurationError("config file {} not found".format(path))

        try:
            with open(path) as f:
                conf = json.loads(f.read())
        except ValueError as e:
            raise ConfigurationError("{} does not contain valid JSON: {}".format(path, e))

        if not isinstance(conf, dict):
            raise ConfigurationError("{} must hold a key-value object".format(path))

        for key, val in conf.items():
            if key not in Config.ASL:
                raise ConfigurationError("unknown config key '{}' in {}".format(key, path))
            Config.set(key, val)

        return conf

    @staticmethod
    def loadEnv(environ = None):
        environ = os.environ if environ is None else environ
        loaded = {}
        for envKey, (key, cast) in Config.ENV_MAPPING.items():
            if envKey not in environ or environ[envKey] == '':
                continue
            try:
                val = cast(environ[envKey])
            except ValueError:
                raise ConfigurationError("{}={} is not a valid {}".format(envKey, environ[envKey], cast.__name__))
            Config.set(key, val)
            loaded[key] = val

        if str(environ.get('ASL_DEBUG', '')).lower() in ['yes', 'y', 'true', '1']:
            Config.set('DEBUG', True)
            loaded['DEBUG'] = True

        return loaded

try:
    if configHasInit:
        pass
except NameError:
    Config.init()
    configHasInit = True

if __name__ == "__main__":
    print(os.getcwd())
    print(Config.loadEnv({'ASL_PCT': '90'}))
    print(Config.retrieveAllCache())
