class CoherenceErrorException(Exception):
    """
    Base class of every error raised by pycoherence.

    :cvar int EXIT_CODE: process exit code used by the command line
    """

    EXIT_CODE = 1


class UsageErrorException(CoherenceErrorException):
    EXIT_CODE = 1


class DataErrorException(CoherenceErrorException):
    EXIT_CODE = 2


class DimensionErrorException(DataErrorException):
    pass


class CheckpointVersionException(DataErrorException):
    pass


class NumericErrorException(CoherenceErrorException):
    EXIT_CODE = 3
