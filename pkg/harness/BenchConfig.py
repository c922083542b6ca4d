from dataclasses import dataclass, field, asdict, replace
from typing import List, Optional

import constants as _C
from utils.Config import Config
from utils.Errors import ConfigurationError
from utils.Tools import parseIntList

MIX_TOLERANCE = 1e-9


@dataclass
class BenchConfig:
    scenario: str = 'fixed'
    lock: str = 'asl'
    nBig: int = 4
    nLittle: int = 4
    ## None runs without an SLO (maximum window)
    sloNs: Optional[int] = None
    pct: int = 99
    durationS: float = 2.0
    csNs: int = 2000
    nonCsNs: int = 0
    ## [(length multiplier, share)]
    mix: List[list] = field(default_factory=lambda: [[1, 1.0]])
    nested: int = 1
    oversubscription: int = 1
    seed: int = 0
    pin: bool = False
    inflation: float = 4.7
    standby: str = 'spin'
    inner: str = 'mcs'
    structure: str = 'both'
    ## sweep points: SLOs for the slo sweep, non-CS lengths for the contention sweep
    sweepValues: List[int] = field(default_factory=list)
    baseline: bool = True

    def __post_init__(self):
        self.mix = BenchConfig.parseMix(self.mix)
        self.validate()

    @staticmethod
    def parseMix(spec):
        """'1:0.5,100:0.5' or [[1, 0.5], [100, 0.5]] -> [[1, 0.5], [100, 0.5]]"""
        if spec is None or spec == '':
            return [[1, 1.0]]
        if isinstance(spec, str):
            out = []
            for part in spec.split(','):
                if not part.strip():
                    continue
                try:
                    length, share = part.split(':')
                    out.append([int(length), float(share)])
                except ValueError:
                    raise ConfigurationError("mix entry '{}' must look like 100:0.5".format(part))
            return out
        return [[int(length), float(share)] for length, share in spec]

    @staticmethod
    def parseSlo(value):
        if value is None or str(value).lower() in _C.SLO_MAX_KEYWORD_ARRAY:
            return None
        try:
            return int(value)
        except ValueError:
            raise ConfigurationError("--slo-ns expects ns or max, got '{}'".format(value))

    def validate(self):
        if self.nBig < 0 or self.nLittle < 0:
            raise ConfigurationError("thread counts must be >= 0, got {} big / {} little".format(self.nBig, self.nLittle))
        if self.nBig + self.nLittle == 0:
            raise ConfigurationError("need at least one big or little thread")
        if self.durationS <= 0:
            raise ConfigurationError("duration must be > 0, got {}".format(self.durationS))
        if self.csNs < 0 or self.nonCsNs < 0:
            raise ConfigurationError("critical section and non-CS lengths must be >= 0")
        if self.lock not in Config.LOCK_KINDS:
            raise ConfigurationError("unknown lock '{}', expected one of {}".format(self.lock, list(Config.LOCK_KINDS)))
        if self.scenario not in Config.SCENARIOS:
            raise ConfigurationError("unknown scenario '{}', expected one of {}".format(self.scenario, list(Config.SCENARIOS)))
        if self.sloNs is not None and self.sloNs < 0:
            raise ConfigurationError("SLO must be >= 0")
        if not 1 <= self.pct <= 99:
            raise ConfigurationError("pct must be within 1..99, got {}".format(self.pct))
        if not self.mix or any(length < 1 or share < 0 for length, share in self.mix):
            raise ConfigurationError("mix entries need length >= 1 and share >= 0")
        total = sum(share for _, share in self.mix)
        if abs(total - 1.0) > MIX_TOLERANCE:
            raise ConfigurationError("mix shares sum to {}, expected 1".format(total))
        if self.nested < 1:
            raise ConfigurationError("nested must be >= 1")
        if self.oversubscription < 1:
            raise ConfigurationError("oversubscription factor must be >= 1")
        if self.inflation < 1:
            raise ConfigurationError("emulation factor a must be >= 1")
        if self.structure not in ('stack', 'list', 'both'):
            raise ConfigurationError("structure must be stack|list|both")
        if self.standby not in ('spin', 'sleep'):
            raise ConfigurationError("standby must be spin|sleep, got '{}'".format(self.standby))
        if self.inner == 'asl' or self.inner not in Config.LOCK_KINDS:
            raise ConfigurationError("inner lock must be one of the baseline locks, got '{}'".format(self.inner))
        return True

    @property
    def threads(self):
        return self.nBig + self.nLittle

    def derive(self, **changes):
        return replace(self, **changes)

    def toDict(self):
        return asdict(self)

    @staticmethod
    def fromOptions(options):
        ## CLI dict -> BenchConfig; keys that are absent or None keep their defaults
        mapping = {
            'scenario': 'scenario', 'lock': 'lock', 'big': 'nBig', 'little': 'nLittle',
            'pct': 'pct', 'duration_s': 'durationS', 'cs_ns': 'csNs', 'noncs_ns': 'nonCsNs',
            'mix': 'mix', 'nested': 'nested', 'oversub': 'oversubscription', 'seed': 'seed',
            'pin': 'pin', 'emulate_a': 'inflation', 'standby': 'standby', 'inner': 'inner',
            'structure': 'structure', 'values': 'sweepValues'
        }
        kwargs = {}
        for opt, attr in mapping.items():
            if options.get(opt) is not None:
                kwargs[attr] = options[opt]
        if 'sweepValues' in kwargs:
            kwargs['sweepValues'] = parseIntList(kwargs['sweepValues'])
        kwargs['sloNs'] = BenchConfig.parseSlo(options.get('slo_ns'))
        kwargs.setdefault('pct', int(Config.get('pct', 99)))
        kwargs.setdefault('inflation', float(Config.get('inflation', 4.7)))
        return BenchConfig(**kwargs)


if __name__ == "__main__":
    print(BenchConfig(mix='1:0.5,100:0.5').toDict())
