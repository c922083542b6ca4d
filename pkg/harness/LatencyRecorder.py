import math
import random
from fractions import Fraction

import numpy as np

from utils.Errors import EmptyRecorderError


def nearestRank(values, p):
    """sorted(values)[ceil(p/100 * n)], 1-indexed."""
    if not 0 < p <= 100:
        raise ValueError("percentile must be within (0, 100], got {}".format(p))
    n = len(values)
    if n == 0:
        raise EmptyRecorderError("no samples to take P{} of".format(p))
    ## exact rank, 0.99 * 100 is not 99 in floating point
    rank = math.ceil(Fraction(str(p)) * n / 100)
    arr = np.sort(np.asarray(values, dtype=np.int64))
    return int(arr[max(rank, 1) - 1])


class LatencyRecorder:
    """Epoch latencies of one thread (or one class after merging).

    In full mode every sample is kept and the sample count equals the number
    of completed epochs. Reservoir mode keeps a uniform sample of fixed size.
    """
    MODE_FULL = 'full'
    MODE_RESERVOIR = 'reservoir'

    def __init__(self, coreClass = None, mode = MODE_FULL, capacity = 100000, seed = 0):
        if mode not in (self.MODE_FULL, self.MODE_RESERVOIR):
            raise ValueError("unknown recorder mode {}".format(mode))
        self.coreClass = coreClass
        self.mode = mode
        self.capacity = capacity
        self.samples = []
        self.seen = 0
        self._rng = random.Random(seed)

    def record(self, latencyNs):
        self.seen += 1
        if self.mode == self.MODE_FULL or len(self.samples) < self.capacity:
            self.samples.append(int(latencyNs))
            return
        slot = self._rng.randrange(self.seen)
        if slot < self.capacity:
            self.samples[slot] = int(latencyNs)

    def __len__(self):
        return len(self.samples)

    def trimWarmup(self, fraction):
        ## drop the first share of samples, they ran before the feedback settled
        if self.mode != self.MODE_FULL or fraction <= 0:
            return 0
        drop = int(len(self.samples) * fraction)
        del self.samples[:drop]
        self.seen -= drop
        return drop

    @staticmethod
    def merge(recorders, coreClass = None):
        merged = LatencyRecorder(coreClass)
        for r in recorders:
            merged.samples.extend(r.samples)
            merged.seen += r.seen
            if r.mode == LatencyRecorder.MODE_RESERVOIR:
                merged.mode = LatencyRecorder.MODE_RESERVOIR
        return merged

    def percentile(self, p):
        return nearestRank(self.samples, p)

    def percentiles(self, ps):
        if not self.samples:
            return {}
        return {percentileKey(p): self.percentile(p) for p in ps}

    def mean(self):
        if not self.samples:
            raise EmptyRecorderError("no samples recorded")
        return float(np.mean(self.samples))

    def violationFraction(self, sloNs):
        if not self.samples:
            return 0.0
        arr = np.asarray(self.samples)
        return float(np.count_nonzero(arr > sloNs)) / len(arr)

    def cdf(self, maxPoints = 200):
        """[(latency_ns, cumulative_fraction)], non-decreasing, ending at 1.0."""
        if not self.samples:
            return []
        values, counts = np.unique(np.asarray(self.samples, dtype=np.int64), return_counts=True)
        cumulative = np.cumsum(counts)
        n = int(cumulative[-1])
        idx = np.arange(len(values))
        if maxPoints and len(values) > maxPoints:
            idx = np.unique(np.linspace(0, len(values) - 1, maxPoints).astype(int))
        return [[int(values[i]), float(cumulative[i]) / n] for i in idx]


def percentileKey(p):
    ## 99 -> 'p99', 99.9 -> 'p99.9'
    return 'p' + ('{:g}'.format(p))


def percentile(recorder, p):
    return recorder.percentile(p)


if __name__ == "__main__":
    r = LatencyRecorder()
    for i in range(1, 101):
        r.record(i)
    print(percentile(r, 99), r.percentiles([50, 90, 99, 99.9]), r.cdf(5))
