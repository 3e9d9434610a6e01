"""Exception types shared across the package."""


class NumericalError(RuntimeError):
    """Base class for failures of the numerical machinery."""


class TermCapExceeded(NumericalError):
    """A series hit its term cap after peaking but before meeting the tolerance."""


class NonConvergent(NumericalError):
    """A series shows no sign of converging (magnitudes never start to decrease)."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class UnknownGenerator(ValueError):
    """Requested operator name is not one of the supported generators."""


class DimensionMismatch(ValueError):
    """Operator matrices built on different truncations were combined."""
