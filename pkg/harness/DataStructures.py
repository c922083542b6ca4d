"""Shared structures the data-structure benchmark protects with the lock under test.

Neither structure synchronises itself; every call must happen inside the
benchmark's critical section.
"""


class Stack:
    def __init__(self):
        self.items = []

    def push(self, value):
        self.items.append(value)

    def pop(self):
        ## None when empty
        if not self.items:
            return None
        return self.items.pop()

    def __len__(self):
        return len(self.items)


class _Node:
    __slots__ = ('key', 'next')

    def __init__(self, key, nxt = None):
        self.key = key
        self.next = nxt


class SortedLinkedList:
    """Singly linked set of integer keys in ascending order."""

    def __init__(self):
        self.head = None
        self.size = 0

    def insert(self, key):
        prev, cur = None, self.head
        while cur is not None and cur.key < key:
            prev, cur = cur, cur.next
        if cur is not None and cur.key == key:
            return False
        node = _Node(key, cur)
        if prev is None:
            self.head = node
        else:
            prev.next = node
        self.size += 1
        return True

    def remove(self, key):
        prev, cur = None, self.head
        while cur is not None and cur.key < key:
            prev, cur = cur, cur.next
        if cur is None or cur.key != key:
            return False
        if prev is None:
            self.head = cur.next
        else:
            prev.next = cur.next
        self.size -= 1
        return True

    def keys(self):
        out = []
        cur = self.head
        while cur is not None:
            out.append(cur.key)
            cur = cur.next
        return out

    def __len__(self):
        return self.size

    def isSorted(self):
        keys = self.keys()
        return len(keys) == self.size and all(a < b for a, b in zip(keys, keys[1:]))


def stackOp(stack, worker):
    ## fifty-fifty push or pop of one element
    ops = worker.ops
    if worker.rng.random() < 0.5:
        stack.push(worker.tid)
        ops['push'] = ops.get('push', 0) + 1
    elif stack.pop() is not None:
        ops['pop'] = ops.get('pop', 0) + 1
    else:
        ops['emptyPop'] = ops.get('emptyPop', 0) + 1


def listOp(linked, worker, keySpace = 1024):
    ops = worker.ops
    key = worker.rng.randrange(keySpace)
    if worker.rng.random() < 0.5:
        if linked.insert(key):
            ops['insert'] = ops.get('insert', 0) + 1
    elif linked.remove(key):
        ops['remove'] = ops.get('remove', 0) + 1


def conservation(workers, added, removed, finalSize):
    """(ok, detail): successful additions minus removals equal the final size."""
    a = sum(w.ops.get(added, 0) for w in workers)
    r = sum(w.ops.get(removed, 0) for w in workers)
    return a - r == finalSize, "{} {} - {} {} = {}, final size {}".format(added, a, removed, r, a - r, finalSize)
