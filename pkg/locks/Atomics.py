"""
Atomic cells for the lock implementations.

Python exposes no hardware CAS, so each cell serialises its read-modify-write
operations through a private threading.Lock. Plain loads are single attribute
reads.
"""

import threading
import time


def cpuRelax():
    ## hands the interpreter lock to whoever is inside the critical section
    time.sleep(0)


## waiter pacing: a few plain yields, then sleeps doubling up to the cap
BACKOFF_YIELDS = 4
BACKOFF_MIN_NS = 1000
BACKOFF_MAX_NS = 32 * 1000


class Backoff:
    """Exponential backoff for one spin-wait.

    A sleeping waiter leaves the interpreter lock to the holder for the whole
    sleep, so a critical section is not cut into slices by its waiters. The
    cap bounds how late a waiter notices a hand-off.
    """
    __slots__ = ('yields', 'delayNs', 'maxNs')

    def __init__(self, maxNs = BACKOFF_MAX_NS):
        self.maxNs = maxNs
        self.reset()

    def reset(self):
        self.yields = 0
        self.delayNs = BACKOFF_MIN_NS

    def pause(self):
        if self.yields < BACKOFF_YIELDS:
            self.yields += 1
            cpuRelax()
            return
        time.sleep(self.delayNs / 1e9)
        self.delayNs = min(self.delayNs << 1, self.maxNs)


class AtomicReference:
    __slots__ = ('_value', '_lock')

    def __init__(self, initial = None):
        self._value = initial
        self._lock = threading.Lock()

    def load(self):
        return self._value

    def store(self, value):
        with self._lock:
            self._value = value

    def exchange(self, value):
        with self._lock:
            old = self._value
            self._value = value
            return old

    def compareAndSet(self, expected, value):
        with self._lock:
            if self._value is expected:
                self._value = value
                return True
            return False


class AtomicInt:
    __slots__ = ('_value', '_lock')

    def __init__(self, initial = 0):
        self._value = initial
        self._lock = threading.Lock()

    def load(self):
        return self._value

    def store(self, value):
        with self._lock:
            self._value = value

    def fetchAdd(self, delta = 1):
        with self._lock:
            old = self._value
            self._value = old + delta
            return old

    def compareAndSet(self, expected, value):
        with self._lock:
            if self._value == expected:
                self._value = value
                return True
            return False


class AtomicBool(AtomicReference):
    __slots__ = ()

    def __init__(self, initial = False):
        super().__init__(bool(initial))

    def testAndSet(self):
        return self.exchange(True)

    def compareAndSet(self, expected, value):
        with self._lock:
            if self._value == expected:
                self._value = value
                return True
            return False
