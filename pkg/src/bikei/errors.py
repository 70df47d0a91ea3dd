class BikeiError(Exception):
    """Base class for errors raised by this package."""


class InvalidBirackError(BikeiError, ValueError):
    """Tables or parameters that cannot describe the requested structure."""


class ParseError(BikeiError, ValueError):
    def __init__(self, message: str, token: str | None = None, position: int | None = None):
        where = ""
        if token is not None:
            where = f" (token {token!r}"
            where += f" at position {position})" if position is not None else ")"
        super().__init__(message + where)
        self.token = token
        self.position = position


class NotInvolutoryError(BikeiError):
    """Unoriented counting requested with a non-involutory birack."""


class NonLinearTargetError(BikeiError):
    """The linear fast path was asked to count over a non-(t,s,r) target."""


class ResourceLimitError(BikeiError):
    """A search or closure would exceed its configured budget."""
