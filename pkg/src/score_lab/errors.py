"""Exception types shared across the package."""


class ScoreLabError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(ScoreLabError, ValueError):
    """Malformed or out-of-domain argument (bad hook set, gcd != 1, ...)."""


class NotACoreError(ScoreLabError, ValueError):
    """A hook set or partition fails a required core condition."""


class UnplaceableHookError(NotACoreError):
    """A diagonal hook has no slot on the abacus grid for the given (s, d)."""


class BeadStructureError(NotACoreError):
    """Bead placement violates the contiguity rules of a core abacus."""


class InvalidPathError(ScoreLabError, ValueError):
    """A step string is not a path of the required type, or breaks constraints."""


class UnsupportedParametersError(ScoreLabError, ValueError):
    """The operation is not defined for these parameters."""


class InternalConsistencyError(ScoreLabError, RuntimeError):
    """A condition that should be impossible; indicates a bug, not bad input."""
