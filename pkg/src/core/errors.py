"""
Error types for Stickel.

Every engine error derives from StickelError. Errors caused by bad input
data also derive from ValueError so callers can treat them as such.
"""


class StickelError(Exception):
    """Base class for engine errors."""


class DiscriminantZero(StickelError, ValueError):
    """Weierstrass model is singular."""


class InconsistentConductor(StickelError, ValueError):
    """Reduction type at a prime contradicts the stated conductor."""


class NotProjectivePoint(StickelError, ValueError):
    """Pair (c, d) has gcd(c, d, N) > 1."""


class InconsistentInput(StickelError, ValueError):
    """Inputs belong to different curves or levels."""


class EigenspaceNotRankOne(StickelError):
    """Hecke cutting did not reach a line within the prime bound."""


class EigenspaceEmpty(StickelError):
    """No common eigenvector with the curve's a_p."""


class NotEigenvector(StickelError):
    """Period map line is not stable under an involution."""


class ModulusTooSmall(StickelError, ValueError):
    """G_M needs M >= 3."""


class NotAUnit(StickelError, ValueError):
    """Residue is not a unit modulo M."""


class NotADivisor(StickelError, ValueError):
    """Projection target modulus does not divide the source modulus."""


class HypothesisViolated(StickelError, ValueError):
    """A relation was asked for outside its hypotheses."""


class NotPrimitive(StickelError, ValueError):
    """Character has smaller conductor than its modulus."""


class PrecisionNotReached(StickelError):
    """Truncations or splitting points of an L-series disagree."""


class ParseError(StickelError, ValueError):
    """Malformed line in a curve fixture file."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
