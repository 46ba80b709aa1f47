"""Exception hierarchy shared across the package.

Exit-code mapping used by the CLI: usage errors are 1, violated
mathematical preconditions are 2, numerical failures are 3.
"""


class MaskitError(Exception):
    """Base class for all package errors."""


class WordParseError(MaskitError, ValueError):
    """Invalid word text; carries the byte offset of the offending char."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class PreconditionError(MaskitError, ValueError):
    """A mathematical precondition was violated (CLI exit code 2)."""


class DomainError(PreconditionError):
    """Parameter point outside the admissible chart Im tau_i > 0."""


class NotSimpleError(PreconditionError):
    """Word does not represent a simple closed curve."""


class AdmissibilityError(PreconditionError):
    """Lamination fails q1 > 0, q2 > 0."""


class SizeError(PreconditionError):
    """Word exceeds the symbolic computation cap."""


class CoordinateError(PreconditionError):
    """Trace polynomial is not of simple-curve shape (bad leading block,
    non-integral twist, or oversized remainder)."""


class WheelExhaustedError(PreconditionError):
    """Curve enumeration depth exhausted before enough disjoint partners
    were found."""

    def __init__(self, message: str, depth: int):
        super().__init__(f"{message} (searched enumeration depth {depth})")
        self.depth = depth


class NumericalError(MaskitError, RuntimeError):
    """A numerical routine failed (CLI exit code 3)."""


class SingularJacobianError(NumericalError):
    """Newton corrector hit a (numerically) singular Jacobian."""


class ConvergenceError(NumericalError):
    """Newton corrector failed to converge within the iteration budget."""


class ContinuationError(NumericalError):
    """Path continuation failed (seed rejected or path lost)."""
