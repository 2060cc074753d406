"""Exception hierarchy shared by every module."""


class BeliefError(ValueError):
    """Base class for all domain errors raised by the package."""


class InvalidMassError(BeliefError):
    """A vector violates the mass-function invariants."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DomainError(BeliefError):
    """An argument lies outside the domain of the operation."""


class FrameMismatchError(BeliefError):
    pass


class DecompositionUndefined(BeliefError):
    """Smets weights requested for a dogmatic (or normalized, for v) BPA."""


class NotIsopignisticError(BeliefError):
    pass


class UnreachableTargetError(BeliefError):
    pass


class InconsistentIsoError(BeliefError):
    """An isopignistic function does not reconstruct to a valid BPA."""


class NotBeliefFunctionError(BeliefError):
    pass
