"""Closed forms for lock throughput on two core classes."""


def theoreticalThroughput(x, a):
    """Normalised throughput when x big critical sections run before each little one.

    Each big critical section costs 1, a little one costs a.
    """
    if x < 0:
        raise ValueError("x must be >= 0, got {}".format(x))
    if a < 1:
        raise ValueError("a must be >= 1, got {}".format(a))
    return (x + 1) / (x + a)


def speedupUpperBound(a):
    """Relative gain of big-only execution over strict big/little alternation."""
    if a < 1:
        raise ValueError("a must be >= 1, got {}".format(a))
    return (a + 1) / 2 - 1


def alternatingThroughput(a):
    ## FIFO with one big and one little always waiting
    return 2 / (1 + a)


if __name__ == "__main__":
    print(theoreticalThroughput(0, 4.7), theoreticalThroughput(9, 4.7), speedupUpperBound(4.75))
