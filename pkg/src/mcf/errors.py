"""Exception types shared across the package."""

from fractions import Fraction


def format_vector(v):
    """Render a vector the way error messages show it, e.g. ``(1.0, 1.0, 0.0)``."""
    return "(" + ", ".join(repr(float(c)) for c in v) + ")"


class MCFError(ValueError):
    """Base class for domain errors raised by the algorithms."""


class DegenerateVectorError(MCFError):
    """Raised when a vector cannot be classified (zero vector, negative or
    non-finite entries, or two zero coordinates)."""

    def __init__(self, vector, step=None):
        self.vector = tuple(vector)
        self.step = step
        msg = "degenerate vector %s" % format_vector(self.vector)
        if step is not None:
            msg += " at step %d" % step
        super().__init__(msg)

    def __reduce__(self):
        return type(self), (self.vector, self.step)


class LoopError(MCFError):
    def __init__(self, algo_name, start, vector):
        self.algo_name = algo_name
        self.start = tuple(start)
        self.vector = tuple(vector)
        super().__init__(
            "On input=%s, algorithm %s loops on %s"
            % (list(start), algo_name, format_vector(self.vector))
        )

    def __reduce__(self):
        return type(self), (self.algo_name, self.start, self.vector)


class NonIntegerError(MCFError):
    def __init__(self, algo_name, start, vector):
        self.algo_name = algo_name
        self.start = tuple(start)
        self.vector = tuple(Fraction(c) for c in vector)
        super().__init__(
            "On input=%s, algorithm %s reaches non integer entries %s"
            % (list(start), algo_name, format_vector(self.vector))
        )

    def __reduce__(self):
        return type(self), (self.algo_name, self.start, self.vector)


class UnimodularityError(MCFError):
    def __init__(self, substitution):
        self.substitution = substitution
        super().__init__("The substitution (%s) must be unimodular." % substitution)

    def __reduce__(self):
        return type(self), (self.substitution,)


class StallError(MCFError):
    """Raised when an S-adic prefix stops growing."""
