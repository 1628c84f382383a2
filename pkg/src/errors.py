"""
Exception hierarchy for the Ant System solver.
"""


class AntSystemError(Exception):
    """Base class for every error raised by the solver."""


class TsplibError(AntSystemError):
    """Raised when a TSPLIB file cannot be turned into an instance."""


class MissingFieldError(TsplibError):
    """A required header keyword or section is absent."""


class UnsupportedEdgeWeightTypeError(TsplibError):
    """EDGE_WEIGHT_TYPE is not one of EUC_2D, CEIL_2D, ATT."""


class MalformedCoordError(TsplibError):
    """A coordinate line is non-numeric, has the wrong arity or an unknown node index."""


class DimensionMismatchError(TsplibError):
    """The number of coordinate lines differs from DIMENSION."""


class InvalidDimensionError(TsplibError):
    """DIMENSION is not an integer of at least 2."""


class IndexOutOfRangeError(AntSystemError, IndexError):
    """A city index lies outside [0, n)."""


class DistanceOverflowError(AntSystemError, OverflowError):
    """A distance does not fit the integer type used for distances."""


class InvalidLengthError(AntSystemError, ValueError):
    """Nearest-neighbour list length outside [1, n)."""


class NotAPermutationError(AntSystemError, ValueError):
    """A tour does not visit every city exactly once."""


class NotClosedError(AntSystemError, ValueError):
    """A tour does not end at its start city."""


class AllVisitedError(AntSystemError):
    """Selection was requested but every city is already visited."""


class ZeroTotalWeightError(AntSystemError):
    """All unvisited cities carry zero weight (strict selection only)."""


class InconsistentLengthError(AntSystemError, ValueError):
    """A stored tour length differs from the recomputed one."""


class LedgerMismatchError(AntSystemError):
    """A measured access ledger differs from the predicted one."""


class ConfigError(AntSystemError, ValueError):
    """Invalid run, strategy or benchmark configuration."""


class InstanceIOError(AntSystemError, OSError):
    """An instance or tour file could not be read."""
