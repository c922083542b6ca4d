import struct

## window, start, unit as three unsigned 64-bit fields
STATE_FORMAT = '=QQQ'
STATE_BYTES = struct.calcsize(STATE_FORMAT)

NO_EPOCH = -1


class EpochState:
    __slots__ = ('window', 'start', 'unit')

    def __init__(self):
        self.window = 0
        ## None while the epoch is closed
        self.start = None
        ## 0 until the first epochEnd seeds it from the SLO
        self.unit = 0

    def isOpen(self):
        return self.start is not None

    def pack(self):
        return struct.pack(STATE_FORMAT, self.window, self.start or 0, self.unit)


class EpochTable:
    """Per-thread epoch states indexed by epoch id."""

    def __init__(self, maxEpochs):
        self.states = [EpochState() for _ in range(maxEpochs)]
        self.currentEpochId = NO_EPOCH

    def __getitem__(self, epochId):
        return self.states[epochId]

    def __len__(self):
        return len(self.states)

    def spaceBytes(self):
        return STATE_BYTES * len(self.states)
