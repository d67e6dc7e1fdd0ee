"""Exception hierarchy shared by all bkpvc modules."""


class BkpvcError(ValueError):
    """Base class for every error raised on bad input."""


class CycleDetected(BkpvcError):
    pass


class InvalidVertex(BkpvcError):
    pass


class DuplicateEdge(BkpvcError):
    pass


class SelfLoop(BkpvcError):
    pass


class EmptyForest(BkpvcError):
    pass


class InvalidK(BkpvcError):
    pass


class TooLarge(BkpvcError):
    pass


class DomainViolation(BkpvcError):
    pass


class NotACover(BkpvcError):
    pass


class MismatchedInputs(BkpvcError):
    pass


class InvalidParams(BkpvcError):
    pass


class CertificateError(RuntimeError):
    """A peeling trace failed an internal check; indicates a bug, not bad input."""
