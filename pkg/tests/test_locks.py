import threading
import time

import pytest

from amp.CoreType import CoreClass, CoreTypeMap
from asl.Asl import Asl
from asl.AslMutex import AslMutex
from asl.SloConfig import SloConfig
from locks.Atomics import AtomicInt, Backoff, BACKOFF_MAX_NS, BACKOFF_MIN_NS, BACKOFF_YIELDS, cpuRelax
from locks.BatchingProportionalLock import BatchingProportionalLock
from locks.FifoQueueLock import FifoQueueLock
from locks.LockObserver import LockObserver
from locks.OsMutexLock import OsMutexLock
from locks.TestAndSetLock import TestAndSetLock
from locks.TicketLock import TicketLock
from utils.Errors import LockContractError

PLAIN_LOCKS = [FifoQueueLock, TestAndSetLock, TicketLock, BatchingProportionalLock, OsMutexLock]


def waitFor(predicate, timeout = 5.0):
    deadline = time.time() + timeout
    while not predicate():
        if time.time() > deadline:
            raise AssertionError("condition not reached within {}s".format(timeout))
        time.sleep(0.001)


def buildLock(kind):
    if kind == 'asl':
        ctm = CoreTypeMap()
        runtime = Asl(SloConfig(maxWindowNs=1000 * 1000), ctm)
        return AslMutex(runtime=runtime), ctm
    return kind(), None


def hammer(lock, coreTypeMap, nThreads, iterations):
    ## unprotected read-yield-write: any overlap loses an increment
    counter = [0]

    def work(i):
        cls = CoreClass.BIG if i % 2 == 0 else CoreClass.LITTLE
        if coreTypeMap is not None:
            coreTypeMap.declare(cls)
        record = lock.newRecord(cls)
        for _ in range(iterations):
            token = lock.acquire(record)
            v = counter[0]
            cpuRelax()
            counter[0] = v + 1
            lock.release(token)

    threads = [threading.Thread(target=work, args=(i,)) for i in range(nThreads)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    return counter[0]


@pytest.mark.parametrize('kind', PLAIN_LOCKS + ['asl'])
def test_mutual_exclusion_counter(kind):
    lock, ctm = buildLock(kind)
    assert hammer(lock, ctm, 4, 500) == 4 * 500


@pytest.mark.bench
@pytest.mark.parametrize('kind', PLAIN_LOCKS + ['asl'])
def test_mutual_exclusion_counter_full(kind):
    for _ in range(20):
        lock, ctm = buildLock(kind)
        assert hammer(lock, ctm, 8, 100000) == 8 * 100000


@pytest.mark.parametrize('kind', PLAIN_LOCKS + ['asl'])
def test_lock_free_states(kind):
    lock, _ = buildLock(kind)
    assert lock.isLockFree()
    token = lock.acquire()
    assert not lock.isLockFree()
    lock.release(token)
    assert lock.isLockFree()


@pytest.mark.parametrize('kind', PLAIN_LOCKS)
def test_try_acquire(kind):
    lock = kind()
    token = lock.tryAcquire()
    assert token is not None
    assert lock.tryAcquire() is None
    lock.release(token)
    again = lock.tryAcquire()
    assert again is not None
    lock.release(again)


def test_held_context_releases_on_error():
    lock = FifoQueueLock()
    with pytest.raises(RuntimeError):
        with lock.held():
            assert not lock.isLockFree()
            raise RuntimeError("boom")
    assert lock.isLockFree()


def enqueueInOrder(lock, observer, classes):
    """Main thread holds the lock while waiters join one after another.

    Returns (order, records) once every waiter acquired and released.
    """
    holder = lock.acquire()
    order = []
    records = {}
    threads = []
    for i, cls in enumerate(classes):
        def run(i = i, cls = cls):
            record = lock.acquire(lock.newRecord(cls))
            records[i] = record
            order.append(i)
            lock.release(record)
        t = threading.Thread(target=run)
        t.start()
        threads.append(t)
        waitFor(lambda i = i: observer.enqueueCount() == i + 2)
    lock.release(holder)
    for t in threads:
        t.join()
    return order, records, holder


@pytest.mark.parametrize('kind', [FifoQueueLock, TicketLock])
def test_fifo_order_of_serialized_enqueues(kind):
    observer = LockObserver()
    lock = kind(observer=observer)
    order, _, _ = enqueueInOrder(lock, observer, [None] * 6)
    assert order == list(range(6))
    assert observer.isFifo()
    assert observer.isGapFree()
    assert observer.acquireCount() == 7


@pytest.mark.bench
@pytest.mark.parametrize('kind', [FifoQueueLock, TicketLock])
def test_fifo_order_holds_in_every_trial(kind):
    failures = 0
    for _ in range(1000):
        observer = LockObserver()
        lock = kind(observer=observer)
        order, _, _ = enqueueInOrder(lock, observer, [None] * 4)
        if order != list(range(4)) or not observer.isFifo():
            failures += 1
    assert failures == 0


def test_ticket_numbers_follow_enqueue_order():
    observer = LockObserver()
    lock = TicketLock(observer=observer)
    _, records, holder = enqueueInOrder(lock, observer, [None, None])
    assert holder.ticket == 0
    assert records[0].ticket == 1
    assert records[1].ticket == 2
    assert lock.isLockFree()


def test_proportional_alternates_with_ratio_one():
    observer = LockObserver()
    lock = BatchingProportionalLock(observer=observer, batchRatio=1)
    enqueueInOrder(lock, observer, [CoreClass.BIG, CoreClass.BIG, CoreClass.LITTLE, CoreClass.LITTLE])
    assert observer.classSequence() == ['big', 'little', 'big', 'little', 'big']


def test_proportional_bounds_big_streaks():
    observer = LockObserver()
    lock = BatchingProportionalLock(observer=observer, batchRatio=2)
    classes = [CoreClass.BIG] * 6 + [CoreClass.LITTLE] * 2
    enqueueInOrder(lock, observer, classes)
    assert observer.classSequence() == ['big', 'big', 'little', 'big', 'big', 'little', 'big', 'big', 'big']
    assert lock.grants[CoreClass.LITTLE] == 2


def test_proportional_only_big_is_fifo():
    observer = LockObserver()
    lock = BatchingProportionalLock(observer=observer, batchRatio=3)
    order, _, _ = enqueueInOrder(lock, observer, [CoreClass.BIG] * 5)
    assert order == list(range(5))
    assert observer.isFifo()


@pytest.mark.parametrize('ratio', [-1, 0])
def test_proportional_rejects_non_positive_ratio(ratio):
    with pytest.raises(ValueError):
        BatchingProportionalLock(batchRatio=ratio)


def test_release_by_non_holder_raises_in_debug():
    lock = FifoQueueLock(debug=True)
    token = lock.acquire()
    with pytest.raises(LockContractError):
        lock.release(lock.newRecord())
    lock.release(token)
    with pytest.raises(LockContractError):
        lock.release(token)


def test_observer_sequence_is_gap_free_under_contention():
    observer = LockObserver()
    lock = TestAndSetLock(observer=observer)
    hammer(lock, None, 4, 200)
    assert observer.acquireCount() == 800
    assert observer.isGapFree()
    assert observer.enqueueCount() == 800


def test_atomic_int_fetch_add_is_atomic():
    n = AtomicInt(0)

    def work():
        for _ in range(1000):
            n.fetchAdd(1)

    threads = [threading.Thread(target=work) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert n.load() == 4000
    assert n.compareAndSet(4000, 0)
    assert not n.compareAndSet(4000, 1)


def test_backoff_yields_then_doubles_up_to_cap(monkeypatch):
    slept = []
    monkeypatch.setattr('locks.Atomics.time.sleep', lambda s: slept.append(s))
    backoff = Backoff()
    for _ in range(BACKOFF_YIELDS + 8):
        backoff.pause()

    assert slept[:BACKOFF_YIELDS] == [0] * BACKOFF_YIELDS
    delays = [round(s * 1e9) for s in slept[BACKOFF_YIELDS:]]
    assert delays[0] == BACKOFF_MIN_NS
    assert delays == sorted(delays)
    assert max(delays) == BACKOFF_MAX_NS

    backoff.reset()
    backoff.pause()
    assert slept[-1] == 0
