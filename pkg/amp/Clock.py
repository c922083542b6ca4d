import time

## CLOCK_MONOTONIC on Linux; resolution well under 1us on every supported platform
nowNs = time.perf_counter_ns


def measureClockCost(calls = 100000):
    """Median cost in ns of one nowNs() call, sampled in batches of 100."""
    samples = []
    batch = 100
    for _ in range(max(1, calls // batch)):
        t0 = nowNs()
        for _ in range(batch):
            nowNs()
        samples.append((nowNs() - t0) / batch)
    samples.sort()
    return samples[len(samples) // 2]


def sleepNs(ns):
    if ns <= 0:
        time.sleep(0)
        return
    time.sleep(ns / 1e9)


if __name__ == "__main__":
    t1 = nowNs()
    t2 = nowNs()
    print(t1 <= t2, measureClockCost())
