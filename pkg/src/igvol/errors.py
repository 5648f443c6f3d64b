"""Exception types shared across the package."""


class NoArbitrageError(ValueError):
    """An option price violates a static no-arbitrage bound.

    The message names the violated bound and the intrinsic value so callers
    (and the CLI) can report exactly what was wrong with the quote.
    """


class ConvergenceError(ArithmeticError):
    """An iterative solve failed to converge within its iteration cap.

    Carries the last bracket so the failure can be diagnosed.
    """

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket
