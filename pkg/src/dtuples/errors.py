"""Exception hierarchy shared by all modules."""


class DTupleError(ValueError):
    """Base class for every domain error raised by the package."""


class DomainError(DTupleError):
    """An argument lies outside the mathematical domain of an operation."""


class InputError(DTupleError):
    """Malformed input: n = 0, nonpositive or duplicate elements, bad ranges."""


class IncompatibleError(DTupleError):
    """A pair or triple that was required to have the property D(n) does not."""


class InapplicableBoundError(DTupleError):
    """A bound formula was evaluated outside the region where it is defined."""


class CacheError(DTupleError):
    """A scan cache file is unreadable or contains a corrupt record."""
