"""Exception types shared across the package."""


class InputError(ValueError):
    """A caller supplied a polynomial or parameter outside an operation's domain."""


class RouteMismatch(ArithmeticError):
    """Two independent evaluations of the same quantity disagreed."""


class NumericalFailure(ArithmeticError):
    """A floating-point procedure failed to converge or certify its result."""
