"""
Exception hierarchy shared by every fuzzyvmf module.

All errors derive from ``ValueError`` so callers that only care about bad
arguments can keep catching that.
"""


class FuzzyVMFError(ValueError):
    """Base class of all fuzzyvmf errors."""


class DomainError(FuzzyVMFError):
    """An argument lies outside the domain of the operation (t<=0, value outside [0,1], ...)."""


class ArityError(FuzzyVMFError):
    """Wrong number of points for an n-argument functional."""


class UnsupportedConstructionError(FuzzyVMFError):
    """A construction was requested under a t-norm it is not valid for."""


class UnsupportedWindowError(FuzzyVMFError):
    """The window geometry is not supported by the requested aggregate."""


class DimensionMismatchError(FuzzyVMFError):
    """Two images that must be compared have different sizes."""


class UndefinedMetricError(FuzzyVMFError):
    """The quality measure is undefined for the given inputs."""


class PreconditionError(FuzzyVMFError):
    """A documented precondition of a check does not hold."""


class ImageFormatError(FuzzyVMFError):
    """An image file is malformed or uses an unsupported format."""


class UsageError(FuzzyVMFError):
    """The command line is incomplete or inconsistent."""
