"""Exception types shared across the package."""


class RennerError(Exception):
    """Base class for all errors raised by this package."""


class CapExceeded(RennerError):
    """Enumeration produced more elements than the configured cap."""


class MalformedGraph(RennerError):
    pass


class InvalidRennerData(RennerError):
    """Data failed validation; ``violations`` holds the report entries."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations[:5])
        super().__init__(f"{len(self.violations)} violation(s): {lines}")


class NotReduced(RennerError):
    pass


class NoGreatestElement(RennerError):
    pass


class ParseError(RennerError):
    pass


class WrongCatalog(RennerError):
    pass


class NotPrime(RennerError):
    pass


class CoverFailure(RennerError):
    pass
