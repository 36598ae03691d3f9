"""Exception types raised across the package."""


class CQGError(Exception):
    """Base class for everything raised deliberately by cqgkit."""


class DimensionMismatch(CQGError, ValueError):
    pass


class NoSolution(CQGError):
    """Linear system is inconsistent."""


class NotHermitian(CQGError, ValueError):
    pass


class NotConvolutionInvertible(CQGError):
    pass


class NotAHopfAlgebra(CQGError):
    """The bialgebra has no antipode."""


class NotCosemisimple(CQGError):
    """No normalised two-sided integral exists."""


class SingularGramForm(CQGError):
    pass


class UnitarizationFailed(CQGError):
    pass


class StarCompatFailed(CQGError):
    pass


class NotACocycle(CQGError):
    pass


class NotASingerPair(CQGError):
    pass


class InputError(CQGError, ValueError):
    """Malformed input file or argument."""
