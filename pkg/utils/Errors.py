class AmpLockError(Exception):
    CODE = 'AmpLock'
    EXIT_CODE = 1

    def __init__(self, message):
        super().__init__(message)
        self.code = self.CODE
        self.message = message

    def __str__(self):
        return "{}: {}".format(self.code, self.message)


class EpochRangeError(AmpLockError):
    CODE = 'EpochRange'


class EpochStateError(AmpLockError):
    CODE = 'EpochState'


class EpochCapacityError(AmpLockError):
    CODE = 'EpochCapacity'


class ConfigurationError(AmpLockError):
    CODE = 'Configuration'
    EXIT_CODE = 2


class CalibrationError(AmpLockError):
    CODE = 'Calibration'
    EXIT_CODE = 2


class PinningError(AmpLockError):
    CODE = 'Pinning'


class EmptyRecorderError(AmpLockError):
    CODE = 'EmptyRecorder'


## unlock-without-lock, only raised when holder tracking is on (debug)
class LockContractError(AmpLockError):
    CODE = 'LockContract'


## worker thread could not start or died with an exception
class WorkerError(AmpLockError):
    CODE = 'Worker'


class ExportError(AmpLockError):
    CODE = 'Export'
