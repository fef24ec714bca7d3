"""Exception types raised across the package."""


class AdmissibilityError(ValueError):
    """The matrix cannot serve as stationary Bratteli data."""


class NegativeEntry(AdmissibilityError):
    pass


class NotPrimitive(AdmissibilityError):
    pass


class NotUnimodular(ValueError):
    pass


class EmptyInput(ValueError):
    pass


class DegreeUnsupported(ValueError):
    pass


class IterationCapExceeded(RuntimeError):
    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class RankDeficientModule(ValueError):
    pass


class OrderMismatch(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class OutOfDomain(ValueError):
    pass


class DuplicatePlaces(ValueError):
    pass
