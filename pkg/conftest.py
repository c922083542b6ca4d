import pytest

from amp.CoreType import CoreTypeMap
from amp.Emulation import EmulationProfile, measureIterationsPerNs
from asl.Asl import resetRuntime
from utils.Config import Config


@pytest.fixture(autouse=True)
def freshConfig():
    Config.init()
    resetRuntime(None)
    yield Config
    resetRuntime(None)


@pytest.fixture
def coreTypeMap():
    return CoreTypeMap()


@pytest.fixture(scope='session')
def quickProfile():
    ## measured once; tests that need tight timing calibrate for themselves
    rate = max(measureIterationsPerNs(50000) for _ in range(3))
    return EmulationProfile(inflation=4.7, iterationsPerNs=rate)
