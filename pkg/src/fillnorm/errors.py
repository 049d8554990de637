"""Exception types shared across the package."""


class FillNormError(Exception):
    """Base class for all library errors."""


class PresentationError(FillNormError):
    """Malformed presentation, word, or chain input."""


class UnsupportedOracle(FillNormError):
    """The declared oracle kind cannot decide equality for this presentation."""


class OracleMismatch(FillNormError):
    """Operands belong to different presentations."""


class BudgetExceeded(FillNormError):
    """A configured enumeration cap (ball size, search radius) was hit."""


class OutOfWindow(FillNormError):
    """A chain's support leaves the current window."""


class PivotLimitExceeded(FillNormError):
    """The exact simplex exceeded its pivot budget."""


class TooLarge(FillNormError):
    """Instance too large for a brute-force or enumeration routine."""


class FiniteGroup(FillNormError):
    """Operation requires an infinite group."""


class NotFinite(FillNormError):
    """Operation requires a finite group."""


class NotInjective(FillNormError):
    """Operation requires an injective 2-boundary on the window."""


class WindowTooSmall(FillNormError):
    """The window cannot accommodate the requested construction."""
