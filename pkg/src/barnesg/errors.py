"""Exception types shared across the library.

The CLI maps these onto distinct exit codes, so the split matters:
arguments outside a function's mathematical domain raise :class:`DomainError`
(or :class:`RangeError` for table/size limits), while a computation that ran
but could not reach its accuracy target raises :class:`AccuracyError`.
"""


class DomainError(ValueError):
    """Argument lies outside the mathematical domain of the operation."""


class RangeError(ValueError):
    """Argument exceeds a configured table or size limit."""


class AccuracyError(RuntimeError):
    """The computation could not meet its accuracy target within budget."""
