"""Exception hierarchy shared by all womcode modules."""


class WomCodeError(Exception):
    """Base class for every error raised by this package."""


class DomainError(WomCodeError, ValueError):
    """An argument is outside the range an operation is defined on."""


class CapacityError(WomCodeError):
    """The memory cannot absorb another write (generations or zeros exhausted)."""


class CorruptStateError(WomCodeError):
    """A memory image or state file is not one a legal write sequence produces."""


class WriteOnceViolation(WomCodeError):
    """A requested update would clear a wit that is already programmed."""
