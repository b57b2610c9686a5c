"""Exception hierarchy shared by the library and the CLI."""


class QmarkError(Exception):
    """Base class for all qmark errors."""


class ParseError(QmarkError):
    """A value or digit-sequence literal could not be parsed."""


class DomainError(QmarkError):
    """An argument lies outside the exact domain of an operation."""


class PrecisionError(QmarkError):
    """Working precision or digit budget ran out before the target tolerance."""


class InconclusiveError(QmarkError):
    """An iteration cap was hit before the computation could decide."""
