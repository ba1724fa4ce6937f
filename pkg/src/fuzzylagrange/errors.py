"""Exception hierarchy shared by every module of the package."""


class GroupError(Exception):
    """Base class for all errors raised by fuzzylagrange."""


class InvalidOrderError(GroupError, ValueError):
    pass


class InvalidParameterError(GroupError, ValueError):
    pass


class InvalidZMParametersError(GroupError, ValueError):
    """A ZM(m, n, r) triple fails one of the defining conditions."""

    def __init__(self, condition: str):
        super().__init__(condition)
        self.condition = condition


class SizeLimitError(GroupError):
    pass


class InvalidTableError(GroupError, ValueError):
    pass


class DomainMismatchError(GroupError, ValueError):
    pass


class NotAPrimeDivisorError(GroupError, ValueError):
    pass


class InvalidTripleError(GroupError, ValueError):
    pass


class FuzzyAxiomError(GroupError, ValueError):
    """A membership function is not a fuzzy subgroup.

    ``witness`` holds the offending pair ``(x, y)`` for the product axiom or
    the single element ``x`` for the inverse axiom.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class EmptyLevelError(GroupError, ValueError):
    pass


class UnsupportedFormError(GroupError, ValueError):
    pass


class SpecSyntaxError(GroupError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class VerificationError(GroupError):
    """A verification suite found a counterexample.

    These indicate an implementation bug; ``witness`` carries enough data to
    reproduce the failure.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class TheoremViolation(VerificationError):
    pass


class LemmaViolation(VerificationError):
    pass


class ConstructionViolation(VerificationError):
    pass


class IsoViolation(VerificationError):
    pass


class ConsistencyError(VerificationError):
    pass


class BijectionMismatch(VerificationError):
    pass
