"""Exception hierarchy shared by every module of the package."""


class YDNicholsError(Exception):
    """Base class for all errors raised by ydnichols."""


class DivisionByZero(YDNicholsError, ZeroDivisionError):
    pass


class SingularMatrix(YDNicholsError):
    pass


class NoSolution(YDNicholsError):
    pass


class NotAGroup(YDNicholsError):
    pass


class GroupMismatch(YDNicholsError):
    pass


class NotAYDModule(YDNicholsError):
    pass


class EmptyModule(YDNicholsError):
    pass


class CutoffExceeded(YDNicholsError):
    """A product or action would leave the computed range of degrees."""


class InvalidProjection(YDNicholsError):
    pass


class PairingDegenerate(YDNicholsError):
    pass


class OmegaInconsistent(YDNicholsError):
    pass


class TransportInconsistent(YDNicholsError):
    pass


class NotDefinedAtCutoff(YDNicholsError):
    """A reflection could not be certified at the requested cutoff."""

    def __init__(self, message, degree_reached=None):
        super().__init__(message)
        self.degree_reached = degree_reached


class InputError(YDNicholsError):
    """Malformed input document; carries the offending field path."""

    def __init__(self, message, field=None):
        if field and not message.startswith(field):
            message = f"{field}: {message}"
        self.field = field
        super().__init__(message)
        self.field = field
