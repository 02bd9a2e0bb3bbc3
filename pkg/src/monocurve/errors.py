"""Exception hierarchy shared by all monocurve modules."""


class MonocurveError(Exception):
    """Base class for every error raised by this package."""


class InputError(MonocurveError, ValueError):
    """Malformed or out-of-range user input."""


class EmptyInput(InputError):
    pass


class NotNumerical(InputError):
    """The generators have a common divisor > 1."""


class NotInSemigroup(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class ParameterOutOfRange(InputError):
    pass


class InfeasibleSum(InputError):
    pass


class DegreeTooSmall(InputError):
    pass


class NotExtremal(MonocurveError):
    pass


class NotQuadratic(MonocurveError):
    pass


class EffortCapExceeded(MonocurveError):
    """A configured computational budget was exhausted.

    Raised instead of returning a partial result.
    """


class CapExceeded(EffortCapExceeded):
    """Size cap of a Betti-number computation was exceeded."""
