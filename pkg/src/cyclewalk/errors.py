"""Exception hierarchy. Every error raised by this package derives from
CycleWalkError, so callers can catch one base type; most also derive from
the matching builtin for drop-in ergonomics.
"""


class CycleWalkError(Exception):
    """Base class for all cyclewalk errors."""


class InvalidParams(CycleWalkError, ValueError):
    """Coin parameters or state data outside their allowed domain."""


class InvalidSize(CycleWalkError, ValueError):
    """Cycle size or matrix dimension is unusable."""


class DimensionMismatch(CycleWalkError, ValueError):
    """Operator and state (or two states) have incompatible dimensions."""


class IndexOutOfRange(CycleWalkError, IndexError):
    """Site, coin, or block index outside 0..limit-1."""


class NotBlockCirculant(CycleWalkError, ValueError):
    """Matrix lacks the 2x2 block-circulant structure within tolerance."""


class NotUnitModulus(CycleWalkError, ValueError):
    """Complex value expected on the unit circle is not."""


class MethodDisagreement(CycleWalkError, RuntimeError):
    """Brute-force and spectral period analyses reached different verdicts."""


class OutOfRange(CycleWalkError, ValueError):
    """A probability-like argument left [0, 1]."""


class OutOfDomain(CycleWalkError, ValueError):
    """Closed-form solver evaluated where its discriminant is negative."""


class RootOutOfRange(CycleWalkError, ValueError):
    """Closed-form solver produced a root outside [0, 1]."""


class InvalidPosition(CycleWalkError, ValueError):
    """Walker position or coin basis label outside the cycle."""


class InvalidMessage(CycleWalkError, ValueError):
    """Message symbol outside 0..k-1."""


class NotPositionEigenstate(CycleWalkError, ValueError):
    """Measurement found no site holding essentially all probability."""


class DegenerateInterval(CycleWalkError, ValueError):
    """Time interval for an exponent estimate is empty or reversed."""
