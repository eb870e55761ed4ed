"""Exception hierarchy for tetracount."""


class TetraError(Exception):
    """Base class for all errors raised by this package."""


class IntegrityError(TetraError):
    """An internal consistency check failed.

    Raised when two computation routes disagree, when a Burnside sum is not
    divisible by the group order, or when a cache write contradicts a stored
    value. Any of these means a bug, never bad input.
    """


class CountOverflowError(TetraError):
    """A count left the 64-bit range during checked accumulation."""


class CapacityError(TetraError):
    """The representative-storing engine exceeded its memory budget."""


class CeilingError(TetraError):
    """The brute-force oracle was asked for a perimeter above its ceiling."""
