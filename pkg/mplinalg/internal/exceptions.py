"""
    :class:`MpLinalgError`
    :class:`ScalarDomainError`
    :class:`DimensionError`
    :class:`SingularMatrixError`
    :class:`PlanError`
    :class:`WorkerPoolError`
    :class:`RoundingModeError`
    :class:`VerificationError`
"""


class MpLinalgError(Exception):
    """Base exception for every error raised by the library."""

    def __init__(self, message, code=None):
        """
        :param str message: Text describing the error
        :param str code: short machine readable code, eg. 'zero_pivot'
        """
        super().__init__(message)
        self.message = message
        self.code = code

    def __str__(self):
        if self.code is None:
            return self.message
        return 'code: {}, message: {}'.format(self.code, self.message)


class ScalarDomainError(MpLinalgError):
    """
    Raised for division by zero, sqrt of a negative number, an unparsable
    decimal string or a value beyond the double range
    """

    pass


class DimensionError(MpLinalgError):
    """Raised when matrix shapes do not conform or a view leaves its parent"""

    pass


class SingularMatrixError(MpLinalgError):
    """Raised by pivot-free elimination when a pivot is exactly zero"""

    def __init__(self, message, index=None):
        super().__init__(message, code='zero_pivot')
        self.index = index


class PlanError(MpLinalgError):
    """Raised for an invalid plan or run configuration"""

    pass


class WorkerPoolError(MpLinalgError):
    """Raised when a parallel section fails; partial results are discarded"""

    pass


class RoundingModeError(MpLinalgError):
    """Raised when the FPU is not rounding to nearest, ties to even"""

    pass


class VerificationError(MpLinalgError):
    """Raised when a property check of the verify suite fails"""

    pass
