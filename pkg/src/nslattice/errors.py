"""Exception types shared by all modules."""


class NSLatticeError(Exception):
    """Base class for every domain error raised by this package."""


class InvalidParameterError(NSLatticeError):
    """A numeric parameter (n, r, self-intersection, degree bound) is out of range."""


class DimensionError(NSLatticeError):
    """A coefficient vector does not match the rank of its lattice."""


class FamilyError(NSLatticeError):
    """An operation was applied to a lattice of the wrong family."""


class LatticeCorruptionError(NSLatticeError):
    """An adjunction-type quantity came out odd: the Gram data is corrupt."""


class NotEffectiveError(NSLatticeError):
    """The class is not effective, so its complete linear system is empty."""


class PreconditionError(NSLatticeError):
    """A documented caller-side assertion does not hold."""
