"""Shared exception types."""


class AmbientMismatch(ValueError):
    """Two edge sets with different ambient vertex counts were combined."""


class CapExceeded(RuntimeError):
    """An enumeration cap was hit and force was not requested."""


class SeedDisagreement(RuntimeError):
    """A strict majority of evaluation seeds disagreed with the maximum rank.

    Carries enough context to rerun the offending computation by hand.
    """

    def __init__(self, message, *, detail=None):
        super().__init__(message)
        self.detail = detail or {}


class WitnessMismatch(RuntimeError):
    """A combinatorial witness failed to match the algebraic oracle.

    This is a hard failure: either the model is wrong or the code is.
    """

    def __init__(self, message, *, detail=None):
        super().__init__(message)
        self.detail = detail or {}
