"""Exception hierarchy shared by all modules."""


class KLSError(ValueError):
    """Base class for every error raised by this package."""


# poset construction / generators
class PosetError(KLSError):
    pass


class NotBounded(PosetError):
    pass


class NotGraded(PosetError):
    pass


class CycleDetected(PosetError):
    pass


class UnknownKind(PosetError):
    pass


class ParameterOutOfRange(PosetError):
    pass


class TooLarge(PosetError):
    pass


# polynomials and incidence algebra
class DegreeExceeded(KLSError):
    def __init__(self, message, interval=None):
        super().__init__(message)
        self.interval = interval


class NotDivisible(KLSError):
    pass


class PosetMismatch(KLSError):
    pass


class NonUnitDiagonal(KLSError):
    pass


# KLS engine
class NotAKernel(KLSError):
    pass


class AntisymmetryViolation(KLSError):
    pass


class FormulaMismatch(KLSError):
    pass


# polynomial properties
class NotPalindromic(KLSError):
    pass


class DegreeTooSmall(KLSError):
    pass


class ZeroPolynomial(KLSError):
    pass
