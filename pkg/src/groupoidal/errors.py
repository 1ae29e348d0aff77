"""Exception hierarchy.

Every error that carries a counterexample stores it in ``witness`` so callers
(and the CLI) can report it without parsing messages.
"""


class GroupoidalError(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ValidationError(GroupoidalError):
    """Input violates an axiom or a precondition."""


class NotAssociative(ValidationError):
    pass


class NotInverse(ValidationError):
    pass


class ClosureTooLarge(ValidationError):
    pass


class NotIdempotent(ValidationError):
    pass


class TooLarge(ValidationError):
    pass


class NoZero(ValidationError):
    pass


class NotBelowE(ValidationError):
    pass


class OutOfDomain(ValidationError):
    pass


class NotInvariant(ValidationError):
    pass


class NotABisection(ValidationError):
    pass


class NotAnIdeal(ValidationError):
    pass


class NotSemisimple(ValidationError):
    pass


class NotAcyclic(ValidationError):
    pass


class UnknownName(ValidationError):
    pass


class BadParams(ValidationError):
    pass


class InternalInconsistency(GroupoidalError):
    """Two independent computations of the same quantity disagree.

    Raised only when a identity that must always hold fails, i.e. a bug.
    """


class VerificationFailed(InternalInconsistency):
    pass
