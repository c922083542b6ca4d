import statistics
import time
from dataclasses import dataclass

from amp.Clock import nowNs
from amp.CoreType import CoreClass
from utils.Config import Config
from utils.Errors import CalibrationError, ConfigurationError
from utils.Tools import _info, ns_format

## clock is re-read after at most this much calibrated spinning
CHUNK_NS = 2000
SELF_CHECK_NS = 100 * 1000
SELF_CHECK_BOUNDS = (0.9, 1.5)


@dataclass
class EmulationProfile:
    inflation: float = 4.7
    iterationsPerNs: float = 0.0
    selfCheckNs: float = 0.0

    def __post_init__(self):
        if self.inflation < 1:
            raise ConfigurationError("inflation factor a must be >= 1, got {}".format(self.inflation))

    def costOf(self, baseNs, coreClass):
        if coreClass is CoreClass.LITTLE:
            return int(baseNs * self.inflation)
        return int(baseNs)

    def toDict(self):
        return {
            'inflation': self.inflation,
            'iterationsPerNs': self.iterationsPerNs,
            'selfCheckNs': self.selfCheckNs
        }


def spinIterations(n):
    x = 0
    for i in range(n):
        x += i
    return x


def measureIterationsPerNs(iterations = 200000):
    t0 = nowNs()
    spinIterations(iterations)
    elapsed = nowNs() - t0
    return iterations / max(elapsed, 1)


def emulatedWork(baseNs, coreClass, profile, yielding = False):
    """Busy-execute about baseNs on a big core and a*baseNs on a little one.

    The end is a wall-clock deadline. By default the thread never gives up
    the interpreter lock voluntarily, which is what a critical section needs.
    With yielding=True (work outside any lock) it yields between calibrated
    chunks so other emulated cores keep their own pace.
    """
    target = profile.costOf(baseNs, coreClass)
    if target <= 0:
        return
    deadline = nowNs() + target
    chunk = max(1, int(profile.iterationsPerNs * CHUNK_NS))
    while True:
        remaining = deadline - nowNs()
        if remaining <= 0:
            return
        spinIterations(min(chunk, max(1, int(profile.iterationsPerNs * remaining))))
        if yielding:
            time.sleep(0)


def selfCheck(profile, delayNs = SELF_CHECK_NS, rounds = 5):
    samples = []
    for _ in range(rounds):
        t0 = nowNs()
        emulatedWork(delayNs, CoreClass.BIG, profile)
        samples.append(nowNs() - t0)
    measured = statistics.median(samples)
    lo, hi = SELF_CHECK_BOUNDS
    if measured < lo * delayNs or measured > hi * delayNs:
        raise CalibrationError("calibrated {} delay took {}, outside [{}, {}]".format(
            ns_format(delayNs), ns_format(measured), ns_format(lo * delayNs), ns_format(hi * delayNs)))
    return measured


def calibrateDelay(inflation = None, rounds = 5, sampler = None):
    """Measure the spin primitive and return a self-checked EmulationProfile."""
    inflation = Config.get('inflation', 4.7) if inflation is None else inflation
    sampler = measureIterationsPerNs if sampler is None else sampler

    rates = [sampler() for _ in range(rounds)]
    if min(rates) <= 0:
        raise CalibrationError("spin primitive reported {} iterations/ns".format(min(rates)))

    mean = statistics.mean(rates)
    spread = statistics.pstdev(rates) / mean
    if spread > 0.5:
        raise CalibrationError("calibration variance {:.0%} exceeds 50%, machine is not quiescent".format(spread))

    profile = EmulationProfile(inflation=inflation, iterationsPerNs=statistics.median(rates))
    profile.selfCheckNs = selfCheck(profile)

    _info("calibration: {:.4f} iterations/ns, {} self-check took {}, a={}".format(
        profile.iterationsPerNs, ns_format(SELF_CHECK_NS), ns_format(profile.selfCheckNs), profile.inflation), alwaysPrint=True)
    return profile


if __name__ == "__main__":
    Config.init()
    Config.set('DEBUG', True)
    p = calibrateDelay()
    t0 = nowNs()
    emulatedWork(1000, CoreClass.LITTLE, p)
    print(nowNs() - t0)
