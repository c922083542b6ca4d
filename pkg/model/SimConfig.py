import re
from dataclasses import dataclass, field, asdict
from typing import List, Optional

from asl.SloConfig import SloConfig
from utils.Errors import ConfigurationError

POLICIES = ['fifo', 'tas_affinity', 'proportional', 'window', 'slo_feedback']
LATENCY_MODELS = ['measured', 'step', 'trace']


@dataclass
class SimConfig:
    """Discrete-event model of one lock shared by big and little threads.

    Time is integer ticks; a big critical section costs csBig ticks and a
    little one round(a * csBig). Throughput is reported in critical sections
    per big-CS quantum.
    """

    nBig: int = 4
    nLittle: int = 4
    a: float = 4.7
    csBig: int = 1000
    nonCs: int = 0
    policy: str = 'fifo'
    horizon: int = 10000
    seed: int = 0
    ## tas_affinity
    affinity: str = 'big'
    mixing: float = 0.0
    ## proportional
    batchRatio: int = 10
    ## window, None means unbounded
    windowTicks: Optional[int] = None
    threshold: int = 1
    ## slo_feedback
    sloTicks: int = 0
    pct: int = 99
    minUnit: int = 1
    maxWindow: int = 10 ** 12
    latencyModel: str = 'measured'
    stepThreshold: int = 0
    stepBelow: int = 0
    stepAbove: int = 1
    latencies: List[int] = field(default_factory=list)
    warmupFraction: float = 0.1

    def __post_init__(self):
        self.validate()

    def validate(self):
        if self.a < 1:
            raise ConfigurationError("a must be >= 1, got {}".format(self.a))
        if self.horizon < 1:
            raise ConfigurationError("horizon must be >= 1, got {}".format(self.horizon))
        if self.nBig < 0 or self.nLittle < 0 or self.nBig + self.nLittle == 0:
            raise ConfigurationError("need at least one thread, got {} big / {} little".format(self.nBig, self.nLittle))
        if self.csBig < 1:
            raise ConfigurationError("csBig must be >= 1 tick")
        if self.nonCs < 0:
            raise ConfigurationError("nonCs must be >= 0")
        if self.policy not in POLICIES:
            raise ConfigurationError("unknown policy {}, expected one of {}".format(self.policy, POLICIES))
        if self.affinity not in ('big', 'little'):
            raise ConfigurationError("affinity must be big|little")
        if not 0 <= self.mixing <= 1:
            raise ConfigurationError("mixing must be a probability")
        if self.latencyModel not in LATENCY_MODELS:
            raise ConfigurationError("unknown latency model {}".format(self.latencyModel))
        if self.windowTicks is not None and self.windowTicks < 0:
            raise ConfigurationError("windowTicks must be >= 0")

    @property
    def littleCost(self):
        return int(round(self.a * self.csBig))

    def sloConfig(self):
        return SloConfig(pct=self.pct, minUnitNs=self.minUnit, maxWindowNs=self.maxWindow, thresholdNs=self.threshold)

    def applyPolicy(self, spec):
        """Parse 'fifo', 'tas_affinity(little)', 'proportional(10)', 'window(5000)',
        'window(inf)' or 'slo_feedback(20000,99)' into this config."""
        m = re.fullmatch(r'\s*([a-z_]+)\s*(?:\((.*)\))?\s*', spec or '')
        if not m:
            raise ConfigurationError("cannot parse policy '{}'".format(spec))
        name, args = m.group(1), m.group(2)
        args = [x.strip() for x in args.split(',')] if args else []
        self.policy = name
        try:
            if name == 'tas_affinity' and args:
                self.affinity = args[0]
                if len(args) > 1:
                    self.mixing = float(args[1])
            elif name == 'proportional' and args:
                self.batchRatio = int(args[0])
            elif name == 'window':
                self.windowTicks = None if not args or args[0] in ('inf', 'max') else int(args[0])
            elif name == 'slo_feedback' and args:
                self.sloTicks = int(args[0])
                if len(args) > 1:
                    self.pct = int(args[1])
        except ValueError:
            raise ConfigurationError("bad arguments in policy '{}'".format(spec))
        self.validate()
        return self

    def toDict(self):
        return asdict(self)
