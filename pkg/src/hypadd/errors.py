"""Shared exception types.

Every failure mode that callers are expected to branch on gets its own
class.  Anything not listed here is a plain bug and surfaces as a bare
AssertionError or TypeError.
"""


class HypaddError(Exception):
    """Base class for all library errors."""


class NonPrimeModulus(HypaddError):
    """Requested prime-field modulus is composite."""


class EvenCharacteristic(HypaddError):
    """Characteristic 2 is rejected: the curve model needs 2 invertible."""


class FieldMismatch(HypaddError):
    """Operands belong to different fields."""


class DivisionByZeroPoly(HypaddError):
    """Polynomial division by the zero polynomial."""


class BothZero(HypaddError):
    """gcd of two zero polynomials is undefined."""


class NotSquare(HypaddError):
    """Matrix operation requires a square matrix."""


class SingularMatrix(HypaddError):
    """Exact solve hit a singular coefficient matrix."""


class DegenerateConfiguration(HypaddError):
    """Pair of points outside the generic chart of the addition law.

    Doubling, shared u-polynomials, and any configuration that makes one
    of the law's linear systems singular land here.  The total fallback
    is the divisor-arithmetic path (cantor_add).
    """


class AnchorMismatch(HypaddError):
    """Points do not project to the same base parameters."""


class NonzeroRemainder(HypaddError):
    """Exact polynomial division left a remainder where none is possible."""


class NotMonicDegree3g(HypaddError):
    """Norm polynomial failed its monic degree-3g shape check."""


class RepeatedAbscissa(HypaddError):
    """Point-list representation needs pairwise distinct x-coordinates."""


class NotOnJacobian(HypaddError):
    """Point and curve are inconsistent: u does not divide v^2 - f."""


class NonGenericDivisor(HypaddError):
    """Reduced divisor has degree below g and no coordinate image."""


class UnknownVariable(HypaddError):
    """Expression uses a variable outside the operator's domain."""


class UnboundVariable(HypaddError):
    """Evaluation environment is missing a variable."""


class ZeroDenominator(HypaddError):
    """Expression evaluation divided by zero."""


class ZeroScale(HypaddError):
    """Grading action requires a nonzero scale factor."""
