from setuptools import setup, find_packages
setup(
    name='AmpLock',
    version='1.0.0',
    description='SLO-bounded reorderable locks for big/little multicore machines, with benchmark harness and lock-ordering simulator',
    long_description='AmpLock lets slow-core lock competitors stand by for a bounded reorder window so fast cores can take the lock first, while a per-epoch feedback loop keeps the tail latency of every epoch within an application-supplied SLO. It ships the baseline locks (MCS, TAS, ticket, proportional, OS mutex), a benchmark harness that emulates core asymmetry on ordinary desktop hardware, and a deterministic discrete-event simulator used as ground truth for the lock-ordering model.',
    license='Apache 2.0 license',
    packages=find_packages(exclude=['tests', 'examples', 'examples.*']),
    py_modules=['main', 'Harness', 'constants'],
    install_requires=['XlsxWriter', 'numpy', 'psutil']
)
