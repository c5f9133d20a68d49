"""Exception types shared across the package."""


class GroupTheoryError(Exception):
    """Base class for all errors raised by this package."""


class InputError(GroupTheoryError):
    """Malformed input: bad permutation, degree mismatch, unknown name."""


class PreconditionError(InputError):
    """A documented operation precondition does not hold for the arguments."""


class ResourceLimitError(GroupTheoryError):
    """A configured enumeration / lattice / degree bound was exceeded."""


class VerificationError(GroupTheoryError):
    """A proved invariant failed; indicates an implementation bug."""
