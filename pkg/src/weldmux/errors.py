"""Exception types shared across the package.

Every error raised by the public API derives from :class:`WeldmuxError`,
so callers (notably the CLI) can distinguish usage problems from genuine
mathematical mismatches.
"""


class WeldmuxError(Exception):
    """Base class for all package-specific errors."""


class GaussSyntaxError(WeldmuxError):
    """Input text does not conform to the Gauss-code grammar."""


class UnpairedCrossing(WeldmuxError):
    """A crossing id appears with only one of its two endpoints."""


class RoleConflict(WeldmuxError):
    """A crossing id appears twice in the same role (O/O or U/U)."""


class SignConflict(WeldmuxError):
    """The two endpoints of a crossing carry different signs."""


class LengthMismatch(WeldmuxError):
    """A weight vector's length differs from the component count."""


class NotApplicable(WeldmuxError):
    """A diagram move was requested at a site where it is not legal."""


class ArityMismatch(WeldmuxError):
    """Two Laurent polynomials with different variable counts were combined."""


class EmptyInput(WeldmuxError):
    """An aggregate operation (gcd_many, ...) received no operands."""


class NotSquare(WeldmuxError):
    """A determinant was requested of a non-square matrix."""


class SizeOutOfRange(WeldmuxError):
    """A minor size exceeds the dimensions of the matrix."""


class NonMonomialImage(WeldmuxError):
    """A substitution image is not a single invertible monomial."""


class ReductionMismatch(WeldmuxError):
    """A symbolic band reduction failed to produce the expected relation."""


class TargetTooLarge(WeldmuxError):
    """A finite homomorphism target exceeds the supported order bound."""


class EmptyDiagram(WeldmuxError):
    """An invariant was requested of a diagram with no components."""
