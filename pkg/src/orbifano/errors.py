"""Exception hierarchy shared by every orbifano module."""


class OrbifanoError(Exception):
    """Base class for all errors raised by the library."""


class BasketSyntaxError(OrbifanoError, ValueError):
    def __init__(self, token, reason="expected b/r"):
        self.token = token
        super().__init__(f"bad basket token {token!r}: {reason}")


class NonCoprime(OrbifanoError, ValueError):
    pass


class NotTerminalType(OrbifanoError, ValueError):
    pass


class AmbiguousType(OrbifanoError):
    pass


class NotAnInteger(OrbifanoError, ArithmeticError):
    def __init__(self, m, value):
        self.m = m
        self.value = value
        super().__init__(f"h0(-{m}K) evaluates to non-integer {value}")


class NegativeGenus(OrbifanoError, ArithmeticError):
    def __init__(self, m, value):
        self.m = m
        self.value = value
        super().__init__(f"h0(-{m}K) evaluates to negative {value}")


class NonPositiveVolume(OrbifanoError, ValueError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"volume {value} is not positive")


class NotWellFormed(OrbifanoError, ValueError):
    pass


class NotQuasiSmoothAtVertex(OrbifanoError):
    pass


class EdgeContained(OrbifanoError):
    pass


class NonIntegralOrbitCount(OrbifanoError):
    pass


class Unsupported(OrbifanoError):
    pass


class AmplitudeNotOne(OrbifanoError, ValueError):
    pass


class MalformedEntry(OrbifanoError, ValueError):
    def __init__(self, index, field, reason):
        self.index = index
        self.field = field
        super().__init__(f"catalog entry #{index}, field {field!r}: {reason}")


class DuplicateName(OrbifanoError, ValueError):
    pass


class IoFailure(OrbifanoError, OSError):
    pass
