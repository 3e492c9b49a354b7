"""Exception types shared across the package."""


class VmLabError(Exception):
    """Base class for all vmlab-specific errors."""


class ResourceExhaustedError(VmLabError):
    """A configured search or sampling budget ran out before an exact answer
    was reached. Raised instead of returning a possibly-wrong result."""


class EncodingError(VmLabError):
    """The graph cannot be encoded as a valid Gaussian state (degenerate
    input, scaling constant out of range, or an invalid covariance)."""


class InvalidKernelError(VmLabError):
    """A Gram matrix fails the positive-semidefiniteness tolerance."""


class DatasetError(VmLabError):
    """A training set is unusable (empty, single-class, or inconsistent)."""
