"""Exception hierarchy shared by every module."""


class StUniformError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParamsError(StUniformError, ValueError):
    pass


class OddTError(InvalidParamsError):
    """t is odd while s != t: the tiling is not unique."""


class TooSmallError(InvalidParamsError):
    pass


class FlatCaseError(StUniformError, ValueError):
    """s = t = 6: P = 2 and every limit formula degenerates."""


class RadiusOutOfRangeError(StUniformError, ValueError):
    pass


class CapExceededError(StUniformError, ValueError):
    pass


class UnsupportedError(StUniformError, ValueError):
    """A combination the library deliberately does not model."""


class EmptyRangeError(StUniformError, ValueError):
    pass


class UnknownRenderKindError(StUniformError, ValueError):
    pass


class ContradictionError(StUniformError, RuntimeError):
    """Internal invariant violated while growing a tiling.

    The tiling is unique, so this always signals a bug, never bad input.
    """


class NonRealResultError(StUniformError, ArithmeticError):
    """A closed-form evaluation left a significant imaginary part."""
