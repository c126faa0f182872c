"""Exception hierarchy shared by all modules."""


class ValidationError(ValueError):
    """Invalid parameters or arguments."""


class DomainError(ValidationError):
    """Argument lies outside the mathematical domain of the operation."""


class ProductRangeError(OverflowError):
    """A direct product overflowed binary64; use ``log_product`` instead."""


class ConvergenceError(ArithmeticError):
    """A numerical procedure did not converge.

    The best available estimate is kept on ``best_estimate`` so callers can
    still report it.
    """

    def __init__(self, message, best_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate


class IntegrityError(ArithmeticError):
    """A cross-check between two independent routes failed."""

    def __init__(self, message, relation=None, residual=None):
        super().__init__(message)
        self.relation = relation
        self.residual = residual
