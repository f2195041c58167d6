"""Exception types shared across the package."""


class MultiEkrError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(MultiEkrError, ValueError):
    """Operands live over different ground sets (mismatched n)."""


class ParameterError(MultiEkrError, ValueError):
    """A numeric argument is outside its documented range."""


class PreconditionError(MultiEkrError, ValueError):
    """An operation refused to run because its contract is not met."""


class FormatError(MultiEkrError, ValueError):
    """A family file or serialized record could not be parsed."""


class BudgetError(MultiEkrError, RuntimeError):
    """An exact computation would exceed its vertex or node budget.

    Raised instead of returning a possibly-wrong answer.
    """


class CertificationError(MultiEkrError, RuntimeError):
    """A constructed family failed its runtime optimality certificate."""
