"""Shared exception types.

Operational failures (bad input, not enough digits) are distinguished from
internal invariant violations so callers can map them to exit codes.
"""


class BsLimitsError(Exception):
    """Base class for all package errors."""


class WordSyntaxError(BsLimitsError, ValueError):
    """Raised when word text does not match the grammar.

    Attributes:
        position: 0-based index into the input where parsing failed.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ZeroModulus(BsLimitsError, ValueError):
    """Raised when a modulus of 0 is supplied."""


class ZeroRing(BsLimitsError, ValueError):
    """Raised for operations undefined over modulus +-1 (the zero ring)."""


class ModulusMismatch(BsLimitsError, ValueError):
    """Raised when combining residues over different moduli."""


class NotADivisor(BsLimitsError, ValueError):
    """Raised when a claimed divisor does not divide the modulus."""


class NotDivisible(BsLimitsError, ValueError):
    """Raised when exact division is requested but does not hold."""


class NonUnit(BsLimitsError, ValueError):
    """Raised when inverting a non-invertible residue or ring element."""


class NotInClass(BsLimitsError, ValueError):
    """Raised when an integer is not in the congruence class of a context."""


class InsufficientPrecision(BsLimitsError):
    """Raised when the stored number of residue digits cannot answer a query.

    Attributes:
        needed: minimal precision that would suffice.
    """

    def __init__(self, needed: int, message: str = ""):
        detail = message or "insufficient precision"
        super().__init__(f"{detail}: need precision >= {needed}")
        self.needed = needed


class InsufficientLevel(BsLimitsError):
    """Raised when a symbolic reduction level is too small for a word.

    Attributes:
        needed: minimal level that would suffice.
    """

    def __init__(self, needed: int, message: str = ""):
        detail = message or "insufficient level"
        super().__init__(f"{detail}: need level >= {needed}")
        self.needed = needed


class PreconditionViolated(BsLimitsError, ValueError):
    """Raised when a constructive recipe is called outside its hypotheses."""


class InternalInvariantViolation(BsLimitsError, AssertionError):
    """Raised when a property the algorithms guarantee fails to hold.

    Seeing this exception means a bug, not bad input.
    """
