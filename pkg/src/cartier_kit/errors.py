"""Exception hierarchy shared by every module of the package."""


class CartierKitError(Exception):
    """Base class for all errors raised by cartier_kit."""


class RingMismatch(CartierKitError, TypeError):
    pass


class NonUnit(CartierKitError, ArithmeticError):
    pass


class DimensionMismatch(CartierKitError, ValueError):
    pass


class ShapeError(DimensionMismatch):
    pass


class UnsupportedRing(CartierKitError, ValueError):
    pass


class NotInvertible(CartierKitError, ArithmeticError):
    pass


class TailNotSupported(CartierKitError, ValueError):
    pass


class WindowTooLarge(CartierKitError, ValueError):
    pass


class InvalidWindow(CartierKitError, ValueError):
    pass


class NotAHopfAlgebra(CartierKitError, ValueError):
    pass


class InfiniteRing(CartierKitError, ValueError):
    pass


class NotAHopfPairing(CartierKitError, ValueError):
    pass


class AssociativityFailure(CartierKitError, ArithmeticError):
    pass


class IsoVerificationFailure(CartierKitError, ArithmeticError):
    pass


class InsufficientHeadroom(CartierKitError, ValueError):
    pass


class BracketingMismatch(CartierKitError, ValueError):
    pass


class NotAField(CartierKitError, ValueError):
    pass


class NotPrime(CartierKitError, ValueError):
    pass


class InvalidPresentation(CartierKitError, ValueError):
    pass


class ParseError(CartierKitError, ValueError):
    pass
