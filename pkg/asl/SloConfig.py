from dataclasses import dataclass, asdict

from utils.Config import Config
from utils.Errors import ConfigurationError


@dataclass(frozen=True)
class SloConfig:
    """Feedback knobs.

    Attributes:
        pct: percentile the SLO is stated for (1..99)
        minUnitNs: floor of the linear growth step
        maxWindowNs: cap on the reorder window, also the lock_eventually window
        thresholdNs: windows below this enqueue immediately
        maxEpochs: per-thread epoch table capacity
    """

    pct: int = 99
    minUnitNs: int = 100
    maxWindowNs: int = 100 * 1000 * 1000
    thresholdNs: int = 200
    maxEpochs: int = 64

    def __post_init__(self):
        if not 1 <= self.pct <= 99:
            raise ConfigurationError("pct must be within 1..99, got {}".format(self.pct))
        if self.minUnitNs <= 0:
            raise ConfigurationError("minUnitNs must be > 0, got {}".format(self.minUnitNs))
        if self.thresholdNs <= 0:
            raise ConfigurationError("thresholdNs must be > 0, got {}".format(self.thresholdNs))
        if self.maxWindowNs < self.thresholdNs:
            raise ConfigurationError("maxWindowNs {} is below thresholdNs {}".format(self.maxWindowNs, self.thresholdNs))
        if self.maxEpochs <= 0:
            raise ConfigurationError("maxEpochs must be > 0, got {}".format(self.maxEpochs))

    @staticmethod
    def fromConfig(**overrides):
        values = {
            'pct': int(Config.get('pct', 99)),
            'minUnitNs': int(Config.get('minUnitNs', 100)),
            'maxWindowNs': int(Config.get('maxWindowNs', 100 * 1000 * 1000)),
            'thresholdNs': int(Config.get('thresholdNs', 200)),
            'maxEpochs': int(Config.get('maxEpochs', 64))
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return SloConfig(**values)

    def toDict(self):
        return asdict(self)
