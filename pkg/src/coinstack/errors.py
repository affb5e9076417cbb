"""Exception hierarchy shared by every coinstack module."""


class CoinstackError(Exception):
    """Base class for all library errors."""


class DenominationError(CoinstackError, ValueError):
    """Denomination text or values could not be turned into a valid set."""


class EmptyInput(DenominationError):
    pass


class NonPositive(DenominationError):
    pass


class Malformed(DenominationError):
    pass


class TooLarge(DenominationError):
    pass


class ResourceLimit(CoinstackError):
    """The requested computation exceeds the configured work bound."""


class SearchLimitExceeded(ResourceLimit):
    """Frobenius search hit its index bound without a terminating run."""


class OracleLimitExceeded(CoinstackError):
    """A brute-force oracle was asked for an index beyond its limit."""


class UnsupportedIndex(CoinstackError, ValueError):
    pass


class NonUnitConstantTerm(CoinstackError, ValueError):
    """Power-series division needs a denominator constant term of +1 or -1."""
