"""Exception hierarchy.

Every error raised deliberately by the package derives from :class:`LantError`,
which the CLI maps to exit code 1.
"""


class LantError(Exception):
    """Base class for domain errors."""


class InvalidArgument(LantError, ValueError):
    pass


class OutOfDomain(LantError, ValueError):
    pass


class SingularDesign(LantError, ArithmeticError):
    """The candidate factorization matrix is not of full column rank."""

    def __init__(self, column, candidate, pivot):
        self.column = column
        self.candidate = candidate
        self.pivot = pivot
        super().__init__(
            f"rank-deficient design: pivot {pivot:.3g} at column {column} "
            f"(candidate {candidate})"
        )


class SingularPrefactor(LantError, ZeroDivisionError):
    """1 - 2**(1 - s) vanishes (s = 1 + 2*pi*i*k/ln 2)."""


class NumericalInconsistency(LantError, ArithmeticError):
    pass
