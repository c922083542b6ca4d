"""Reorder-window feedback: linear growth while the SLO holds, halving on violation."""


def seedUnit(sloNs, cfg):
    ## growth step for an epoch that has never been adjusted
    return max(sloNs * (100 - cfg.pct) // 100, cfg.minUnitNs)


def adjustWindow(window, unit, latency, slo, cfg):
    """Return (window', unit') after one epoch of the given latency.

    Violation: window halves and unit becomes (100-pct)% of the new window,
    floored at minUnitNs. Otherwise window grows by unit, capped at maxWindowNs.
    unit is only recomputed on violation.
    """
    if latency > slo:
        window = window >> 1
        unit = max(window * (100 - cfg.pct) // 100, cfg.minUnitNs)
    else:
        window = min(window + unit, cfg.maxWindowNs)
    return window, unit


def recoverySteps(pct):
    ## growth steps after a halving until the window is back where it was
    return -(-100 // (100 - pct))


class FeedbackController:
    """One epoch's window/unit pair driven by observed latencies; the simulator
    and the runtime share this so their trajectories stay identical."""

    def __init__(self, cfg):
        self.cfg = cfg
        self.window = 0
        self.unit = 0
        self.trajectory = []

    def observe(self, latency, slo):
        if self.unit == 0:
            self.unit = seedUnit(slo, self.cfg)
        before = self.window
        self.window, self.unit = adjustWindow(self.window, self.unit, latency, slo, self.cfg)
        self.trajectory.append((latency, before, self.window, self.unit))
        return self.window


def replay(latencies, slo, cfg):
    """Window after each latency of the sequence, starting from a fresh epoch."""
    window = 0
    unit = 0
    windows = []
    for latency in latencies:
        if unit == 0:
            unit = seedUnit(slo, cfg)
        window, unit = adjustWindow(window, unit, latency, slo, cfg)
        windows.append(window)
    return windows
