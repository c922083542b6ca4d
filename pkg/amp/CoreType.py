import os
import threading
from enum import Enum

import psutil

from utils.Config import Config
from utils.Errors import ConfigurationError, PinningError
from utils.Tools import _warn, _pr

class CoreClass(Enum):
    BIG = 'big'
    LITTLE = 'little'

    @staticmethod
    def parse(value):
        if isinstance(value, CoreClass):
            return value
        try:
            return CoreClass(str(value).strip().lower())
        except ValueError:
            raise ConfigurationError("'{}' is not a core class, expected big|little".format(value))


def currentCoreId():
    ## field 39 of /proc/<tid>/stat is the cpu the thread last ran on
    try:
        with open('/proc/thread-self/stat') as f:
            stat = f.read()
        fields = stat[stat.rfind(')') + 2:].split()
        return int(fields[36])
    except (OSError, IndexError, ValueError):
        pass

    try:
        return psutil.Process().cpu_num()
    except (AttributeError, psutil.Error):
        return -1


def logicalCores():
    if hasattr(os, 'sched_getaffinity'):
        return sorted(os.sched_getaffinity(0))
    return list(range(psutil.cpu_count(logical=True) or 1))


def affinitySupported():
    return hasattr(os, 'sched_setaffinity')


def topology():
    return {
        'logicalCpus': psutil.cpu_count(logical=True),
        'physicalCpus': psutil.cpu_count(logical=False),
        'usableCores': len(logicalCores()),
        'affinitySupported': affinitySupported()
    }


def pinThread(coreId):
    """Bind the calling thread to coreId.

    Returns 'pinned', or 'unsupported' on platforms without affinity control.
    Raises PinningError for unknown cores or when the OS refuses.
    """
    total = psutil.cpu_count(logical=True) or 1
    if coreId < 0 or coreId >= total:
        raise PinningError("core {} does not exist (logical cpus: {})".format(coreId, total))

    if not affinitySupported():
        _warn("thread affinity is not supported on this platform, continuing unpinned", forcePrint=False)
        return 'unsupported'

    try:
        ## pid 0 is the calling thread for sched_setaffinity on Linux
        os.sched_setaffinity(0, {coreId})
    except OSError as e:
        raise PinningError("pinning to core {} refused: {}".format(coreId, e))

    _pr("pinned thread {} to core {}".format(threading.get_native_id(), coreId))
    return 'pinned'


class CoreTypeMap:
    SOURCE_FILE = 'file'
    SOURCE_ENV = 'env'
    SOURCE_EMULATION = 'emulation'

    def __init__(self, mapping = None, source = SOURCE_EMULATION):
        self.mapping = dict(mapping or {})
        self.source = source
        self._declared = threading.local()

    @staticmethod
    def parseSpec(spec):
        """'0-3:big,4-7:little' or {'0-3': 'big', '5': 'little'} -> {coreId: CoreClass}"""
        mapping = {}
        if not spec:
            return mapping

        if isinstance(spec, dict):
            items = list(spec.items())
        else:
            items = []
            for part in str(spec).split(','):
                if not part.strip():
                    continue
                if ':' not in part:
                    raise ConfigurationError("core map entry '{}' must look like 0-3:big".format(part))
                k, v = part.split(':', 1)
                items.append((k, v))

        for cores, cls in items:
            cls = CoreClass.parse(cls)
            cores = str(cores).strip()
            try:
                if '-' in cores:
                    lo, hi = cores.split('-')
                    ids = range(int(lo), int(hi) + 1)
                else:
                    ids = [int(cores)]
            except ValueError:
                raise ConfigurationError("'{}' is not a core id or range".format(cores))
            for coreId in ids:
                mapping[coreId] = cls

        return mapping

    @staticmethod
    def fromConfig(emulation = True):
        spec = Config.get('coreTypes', None)
        if not spec:
            if not emulation:
                raise ConfigurationError("no core type map configured (set coreTypes or ASL_CORE_MAP)")
            return CoreTypeMap({}, CoreTypeMap.SOURCE_EMULATION)

        source = CoreTypeMap.SOURCE_FILE if isinstance(spec, dict) else CoreTypeMap.SOURCE_ENV
        ctm = CoreTypeMap(CoreTypeMap.parseSpec(spec), source)
        if not emulation:
            ctm.validate()
        return ctm

    def validate(self, coreIds = None):
        coreIds = logicalCores() if coreIds is None else coreIds
        missing = [c for c in coreIds if c not in self.mapping]
        if missing:
            raise ConfigurationError("core type map does not cover cores {}".format(missing))
        return True

    ## emulation mode: the thread says what it is
    def declare(self, coreClass):
        self._declared.cls = CoreClass.parse(coreClass) if coreClass is not None else None

    def declared(self):
        return getattr(self._declared, 'cls', None)

    def classifyCurrentCore(self):
        cls = getattr(self._declared, 'cls', None)
        if cls is not None:
            return cls

        coreId = currentCoreId()
        if coreId in self.mapping:
            return self.mapping[coreId]

        ## validate() catches this at startup, only unvalidated maps get here
        return CoreClass.BIG

    def isBigCore(self):
        return self.classifyCurrentCore() is CoreClass.BIG

    def coresOf(self, coreClass):
        return sorted(c for c, k in self.mapping.items() if k is coreClass)


if __name__ == "__main__":
    Config.init()
    ctm = CoreTypeMap(CoreTypeMap.parseSpec('0-3:big,4-7:little'), CoreTypeMap.SOURCE_ENV)
    print(topology(), currentCoreId(), ctm.classifyCurrentCore())
