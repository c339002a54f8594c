class PellError(ValueError):
    """Base class for domain errors raised by this package."""


class PerfectSquare(PellError):
    pass


class OutOfDomain(PellError):
    pass


class NotSolvable(PellError):
    pass


class BadUnit(PellError):
    pass


class InvalidParams(PellError):
    pass
