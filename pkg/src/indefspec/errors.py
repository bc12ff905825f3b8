"""Exception hierarchy shared by all modules.

Errors carry enough state (regime margins, unresolved search boxes, ...) for
callers to decide between fallback evaluation paths and hard failure.
"""


class IndefspecError(Exception):
    """Base class for all package errors."""


class DomainError(IndefspecError):
    """Argument outside the mathematical domain of the operation."""


class ArgumentError(IndefspecError):
    """Argument outside the supported parameter range."""


class PoleError(IndefspecError):
    """Evaluation requested at (or too close to) a pole."""


class OutOfRegimeError(IndefspecError):
    """Asymptotic expansion requested outside its regime.

    Attributes
    ----------
    suggestion : str
        Name of the evaluation path the caller should use instead.
    """

    def __init__(self, msg, suggestion=""):
        super().__init__(msg)
        self.suggestion = suggestion


class RegionError(IndefspecError):
    """Validity sector of the uniform expansion violated.

    Attributes
    ----------
    margin : float
        Signed angular distance to the sector boundary (negative = outside).
    """

    def __init__(self, msg, margin):
        super().__init__(msg)
        self.margin = margin


class AccuracyError(IndefspecError):
    """Quadrature / refinement failed to reach the requested accuracy.

    Attributes
    ----------
    achieved : float
        Error estimate actually achieved.
    """

    def __init__(self, msg, achieved):
        super().__init__(msg)
        self.achieved = achieved


class NotInClassError(IndefspecError):
    """Function violates the sign-alternating-pole class assumptions."""


class BranchError(IndefspecError):
    """Spectral parameter on a branch cut where the evaluation is undefined."""


class RealAxisError(IndefspecError):
    """Complex-eigenvalue operation called with a real spectral parameter."""


class ExcludedParameterError(IndefspecError):
    """Coupling sits exactly at an excluded value (e.g. a Bessel zero)."""


class BracketError(IndefspecError):
    """Root bracket does not contain a sign change."""


class IndexingError(IndefspecError):
    """A root with a specific index could not be isolated.

    Attributes
    ----------
    n : int
        Index of the missing / ambiguous root.
    """

    def __init__(self, msg, n):
        super().__init__(msg)
        self.n = n


class IncompleteSearchError(IndefspecError):
    """Argument-principle search could not resolve a rectangle.

    Attributes
    ----------
    rectangle : tuple
        (re_min, re_max, im_min, im_max) of the unresolved box.
    """

    def __init__(self, msg, rectangle):
        super().__init__(msg)
        self.rectangle = rectangle


class SampleError(IndefspecError):
    """Not enough data points for the requested fit."""


class StiffnessError(IndefspecError):
    """ODE integrator step size underflowed."""


class DomainSizeError(IndefspecError):
    """Truncated computational domain demonstrably too small."""
