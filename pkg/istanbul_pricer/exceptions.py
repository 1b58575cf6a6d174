class IstanbulError(Exception):
    """
    base error of the pricing library
    """


class DomainError(IstanbulError, ValueError):
    """
    input violates the preconditions of an operation
    """


class RegimeError(DomainError):
    """
    operation needs an up-barrier strictly above the spot
    """


class NegativePriceError(DomainError):
    """
    truncated expansion produced a price too negative to be roundoff
    """


class AccuracyError(IstanbulError, ArithmeticError):
    """
    numerical routine could not reach the requested tolerance
    """

    def __init__(self, message, estimate=None, error_bound=None):
        super(AccuracyError, self).__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


class ReportError(IstanbulError, OSError):
    """
    report output could not be written
    """
