"""Exception hierarchy shared by every module of the package."""


class FewWeightError(Exception):
    """Base class for all errors raised by fewweight."""


class NotOddPrime(FewWeightError, ValueError):
    pass


class NotIrreducible(FewWeightError, ValueError):
    pass


class NotPrimitive(FewWeightError, ValueError):
    pass


class DivisionByZero(FewWeightError, ZeroDivisionError):
    pass


class LogOfZero(FewWeightError, ValueError):
    pass


class BadDivisor(FewWeightError, ValueError):
    pass


class ContextMismatch(FewWeightError, ValueError):
    """Operands belong to different field contexts."""


class NotBaseRing(FewWeightError, ValueError):
    """A ring element has a component outside the prime subfield."""


class BudgetExceeded(FewWeightError, RuntimeError):
    pass


class CharOfZero(FewWeightError, ValueError):
    pass


class ResidualTooLarge(FewWeightError, ArithmeticError):
    """A character-sum evaluation did not land on an integer.

    This almost always signals a character-indexing bug, not rounding noise.
    """


class HypothesisFailed(FewWeightError):
    def __init__(self, condition: str):
        super().__init__(f"hypothesis failed: {condition}")
        self.condition = condition


class UnknownTheorem(FewWeightError, KeyError):
    pass
