"""Exception hierarchy shared by the backends and the CLI."""


class AlgebraError(ValueError):
    """Base class for every error raised by this package."""


class NotStabilized(AlgebraError):
    """The trailing window of a fitted h-polynomial did not vanish."""


class PreconditionError(AlgebraError):
    """An operation was called outside the range where it is defined."""


class NotMember(PreconditionError):
    pass


class NotSubmodule(PreconditionError):
    pass


class NotPrimary(PreconditionError):
    pass


class WrongDimension(PreconditionError):
    pass


class ParseError(AlgebraError):
    """Malformed or invalid analysis request."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if path:
            where.append(f"at {path}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
