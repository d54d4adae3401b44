"""
Errors - Exception hierarchy shared by the library and the CLI.

Every exception carries the exit code the CLI reports for it:
1 for bad input, 2 for a mathematical obstruction, 3 for a certification failure.
"""

from typing import Sequence


class LinkingError(Exception):
    """Base class for every error raised by the toolkit."""

    exit_code = 1


class InputError(LinkingError):
    """Exception raised when the input data is malformed or incomplete."""

    exit_code = 1


class MathError(LinkingError):
    """Exception raised when the requested quantity is not defined for the data."""

    exit_code = 2


class NumericalError(LinkingError):
    """Exception raised when a certified computation cannot decide its answer."""

    exit_code = 3


# Input errors


class NotSquareError(InputError):
    """Exception raised when a square matrix is required."""
    pass


class NotSymmetricError(InputError):
    """Exception raised when a symmetric matrix is required."""
    pass


class DimensionMismatchError(InputError):
    """Exception raised when vector and matrix sizes disagree."""
    pass


class InvalidSpecError(InputError):
    """Exception raised for an invalid crossing-change specification."""
    pass


class InvalidInputError(InputError):
    """Exception raised when input violates a proven strict inequality."""
    pass


class MissingAmbientLkError(InputError):
    """Exception raised when an ambient linking number is needed but absent."""
    pass


class MissingEulerNumberError(InputError):
    """Exception raised when a Goeritz document has no normal Euler number."""
    pass


class UnknownComponentError(InputError):
    """Exception raised for a component label that the data does not define."""
    pass


class SchemaError(InputError):
    """Exception raised when a document does not match the JSON schema."""
    pass


class InvariantViolationError(InputError):
    """Exception raised when a schema-valid document breaks a data invariant."""

    def __init__(self, violations: Sequence[str]) -> None:
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


# Mathematical errors


class ZeroPolynomialError(MathError):
    """Exception raised when a nonzero Laurent polynomial is required."""
    pass


class DivisionByZeroError(MathError):
    """Exception raised when dividing by an exact zero."""
    pass


class DenominatorVanishesError(MathError):
    """Exception raised when a rational function has a pole at the evaluation point."""
    pass


class SingularMatrixError(MathError):
    """Exception raised when an inverse of a singular matrix is needed."""
    pass


class SingularFormError(MathError):
    """Exception raised when a Hermitian form is certified singular."""
    pass


class SamePointError(MathError):
    """Exception raised when a linking number of a lift with itself is requested."""
    pass


class NotRationalHomologySphereError(MathError):
    """Exception raised when the branched cover has infinite first homology."""
    pass


class OmegaIsAlexanderRootError(MathError):
    """Exception raised when the root of unity is a root of the Alexander polynomial."""
    pass


class BasisConversionError(MathError):
    """Exception raised when a polynomial cannot be rewritten in powers of z = t - 1/t."""
    pass


# Numerical errors


class NumericallyUncertainError(NumericalError):
    """Exception raised when precision escalation reaches the cap undecided."""
    pass
