"""Exception types shared across the package."""


class FracNewtonError(Exception):
    """Base class for all errors raised by this package."""


class PoleArgument(FracNewtonError):
    """gamma() called at or too close to a nonpositive integer."""


class SingularPower(FracNewtonError):
    """cpow() called with zero base and a nonpositive exponent."""


class SingularPoint(FracNewtonError):
    """Fractional derivative requested at z=0 with non-integer order."""


class DomainAlpha(FracNewtonError):
    """Derivative order outside the supported range."""


class Divergence(FracNewtonError):
    """Evaluation would overflow; the point has escaped."""


class DerivativeVanished(FracNewtonError):
    """Fractional derivative modulus below the eps_div floor."""


class DegenerateDifference(FracNewtonError):
    """Aitken denominator too small to extrapolate."""


class InsufficientData(FracNewtonError):
    """Not enough usable iterates to estimate a convergence order."""


class ParseError(FracNewtonError):
    """Malformed polynomial input."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DegenerateLeadingCoefficient(FracNewtonError):
    """Highest-power coefficient is zero for a nonconstant polynomial."""


class InvalidConfig(FracNewtonError):
    """A configuration value violates its documented invariant."""
