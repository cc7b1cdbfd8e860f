"""Exception taxonomy shared by the library and the CLI."""


class MonoidError(ValueError):
    """Base class for domain errors (CLI exit code 2)."""


class EmptyInput(MonoidError):
    pass


class GcdNotOne(MonoidError):
    """The generators do not generate a cofinite monoid."""


class NotAMember(MonoidError):
    pass


class OracleTooLarge(MonoidError):
    """Brute-force enumeration would exceed the configured node budget."""


class IndexOutOfRange(MonoidError):
    pass


class WTooSmall(MonoidError):
    pass


class InvalidParameters(MonoidError):
    """An (a, d, w) triple violating w < a or positivity."""
