"""Exception hierarchy for the toolkit.

Every error carries the process exit code the CLI should use:
2 for bad input, 3 for a failed mathematical assertion.
"""


class ToolkitError(Exception):
    """Base class for all toolkit errors."""

    exit_code: int = 1


class InputError(ToolkitError):
    """Invalid user input or parameters."""

    exit_code = 2


class AssertionFailure(ToolkitError):
    """A mathematical identity or check did not hold."""

    exit_code = 3


class DivisionByZeroError(ToolkitError, ZeroDivisionError):
    """Inverse of zero requested in the cyclotomic field."""

    exit_code = 2


class ConductorMismatchError(InputError):
    """Scalars from different cyclotomic fields were mixed."""


class ShapeMismatchError(InputError):
    """Matrix or vector shapes are incompatible."""


class SingularMatrixError(InputError):
    """An invertible matrix was required."""


class RepeatedSpectrumError(InputError):
    """Spectrum entries must be pairwise distinct."""


class NotARootError(InputError):
    """Dimension vector is not a positive root."""


class IrregularWeightError(InputError):
    """Weight tau is not regular."""


class NonClosedPathError(InputError):
    """A closed path was required."""


class NotSandwichError(InputError):
    """Element is not of the form v * path * w."""


class UnsupportedSizeError(InputError):
    """Requested size is outside the supported range."""


class ValidationError(AssertionFailure):
    """Relation residuals are nonzero."""


class NakajimaSolveError(AssertionFailure):
    """No Nakajima point found at the given parameters."""


class NotSimpleError(AssertionFailure):
    """Representation or module is not simple."""


class RankError(AssertionFailure):
    """A rank condition failed."""


class DimensionError(AssertionFailure):
    """A subspace has the wrong dimension."""
