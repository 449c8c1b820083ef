"""Exception hierarchy shared by every module."""


class MomentAngleError(Exception):
    """Base class for all library errors."""


class InputError(MomentAngleError, ValueError):
    """Malformed or out-of-range input."""


class DomainError(MomentAngleError, ValueError):
    """Operation is not defined for the given arguments."""


class StructureError(MomentAngleError):
    """A complex or pair model violates a structural invariant."""


class CapacityError(MomentAngleError):
    """A configured size cap would be exceeded."""
