"""Exception hierarchy shared by all modules."""


class PosBasisError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class ZeroPolynomial(PosBasisError):
    pass


class EmptySet(PosBasisError):
    pass


class BadInterval(PosBasisError):
    pass


class NoLimitPoints(PosBasisError):
    pass


class IndexOutOfRange(PosBasisError):
    pass


class NodeNotInSet(PosBasisError):
    pass


class LengthMismatch(PosBasisError):
    pass


class TooManyNodes(PosBasisError):
    pass


class FiniteSet(PosBasisError):
    pass


class BadVariantParity(PosBasisError):
    pass


class DegreeTooLow(PosBasisError):
    pass


class NotAdmissible(PosBasisError):
    pass


class TooLarge(PosBasisError):
    pass


class ParseError(PosBasisError):
    """Malformed textual input (CLI exit code 2)."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
