"""Exception hierarchy shared by all modules.

The CLI maps ``GuardExceeded`` to exit code 3 and every other
``TabprimeError`` to exit code 4; parse failures (``ParseError``) exit with 2.
"""


class TabprimeError(Exception):
    pass


class ParseError(TabprimeError, ValueError):
    pass


class NotSemistandard(TabprimeError, ValueError):
    def __init__(self, row: int, col: int, msg: str = ""):
        self.row = row
        self.col = col
        super().__init__(msg or f"not semistandard at row {row}, column {col}")


class EntryOutOfRange(TabprimeError, ValueError):
    pass


class SizeMismatch(TabprimeError, ValueError):
    pass


class NotAFactor(TabprimeError, ValueError):
    pass


class InvalidParity(TabprimeError, ValueError):
    pass


class OutOfWindow(TabprimeError, ValueError):
    pass


class WrongColumnCount(TabprimeError, ValueError):
    pass


class RegimeViolation(TabprimeError, ValueError):
    pass


class NotSmallGap(TabprimeError, ValueError):
    pass


class GuardExceeded(TabprimeError, RuntimeError):
    pass


# bound on |S_m| for the canonical-basis expansion
BoundExceeded = GuardExceeded


class InternalInconsistency(TabprimeError, RuntimeError):
    """A computed certificate failed; indicates a bug, not bad input."""


class NoFactorization(InternalInconsistency):
    pass


class MultipleFactorizations(InternalInconsistency):
    pass


class NoWitness(InternalInconsistency):
    pass
