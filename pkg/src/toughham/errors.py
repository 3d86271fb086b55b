"""Exception hierarchy shared by all toughham modules."""


class ToughHamError(Exception):
    """Base class for every error raised by this package."""


class MalformedGraph6(ToughHamError, ValueError):
    pass


class MalformedEdgeList(ToughHamError, ValueError):
    pass


class TooLarge(ToughHamError, ValueError):
    """A graph would exceed the 64-vertex bitset limit."""


class InvalidSize(ToughHamError, ValueError):
    pass


class EmptyGraph(ToughHamError, ValueError):
    pass


class TooSmall(ToughHamError, ValueError):
    pass


class CapExceeded(ToughHamError):
    """An exact solver was asked to run beyond its configured vertex cap."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: n={n} exceeds cap {cap} (set TOUGHHAM_CAP_N to raise it)")
        self.what = what
        self.n = n
        self.cap = cap


class NotOnCycle(ToughHamError, ValueError):
    pass


class InvalidCycle(ToughHamError, ValueError):
    pass


class NoExteriorVertex(ToughHamError, ValueError):
    pass


class SnotCut(ToughHamError, ValueError):
    """The vertex set handed to a cut check does not disconnect the graph."""


class ArcTooShort(ToughHamError):
    pass


class ValidationFailure(ToughHamError):
    """A produced witness failed its own re-validation. Always an internal bug."""


class BudgetExhausted(ToughHamError):
    pass
