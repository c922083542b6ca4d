class StandbyWaitTrace:
    """What one standby wait observed: when it polled and why it stopped."""

    def __init__(self):
        self.startNs = 0
        self.windowEndNs = 0
        self.iterations = 0
        ## (counter value, timestamp ns, observed free)
        self.polls = []
        self.reason = None
        self.enqueuedAt = 0

    def addPoll(self, counter, ts, free):
        self.polls.append((counter, ts, free))

    def pollCounters(self):
        return [p[0] for p in self.polls]

    def pollCount(self):
        return len(self.polls)

    def followsDoubling(self):
        return self.pollCounters() == [1 << i for i in range(len(self.polls))]

    def enqueueDelayNs(self):
        return self.enqueuedAt - self.startNs

    def toDict(self):
        return {
            'startNs': self.startNs,
            'windowEndNs': self.windowEndNs,
            'iterations': self.iterations,
            'polls': self.pollCounters(),
            'reason': self.reason,
            'enqueueDelayNs': self.enqueueDelayNs()
        }
