"""Exception types raised by modenum."""


class ModEnumError(Exception):
    """Base class for all library errors."""


class NonMonicModulus(ModEnumError):
    pass


class InexactDivision(ModEnumError):
    """A division that must be exact left a remainder (indicates a bug)."""


class NonIntegralInput(ModEnumError):
    pass


class NonIntegerResult(ModEnumError):
    """A closed-form count came out non-integral (indicates a bug)."""


class DomainError(ModEnumError, ValueError):
    pass


class EmptyWord(ModEnumError, ValueError):
    pass


class NotFlatNonDyck(ModEnumError, ValueError):
    pass


class LengthNotDivisible(ModEnumError, ValueError):
    pass


class ParseError(ModEnumError, ValueError):
    pass
