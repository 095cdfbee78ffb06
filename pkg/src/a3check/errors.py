"""Exception hierarchy.

Input problems derive from :class:`InputError` (CLI exit code 1); broken
internal identities derive from :class:`InvariantViolation` (exit code 2).
"""


class A3Error(Exception):
    pass


class InputError(A3Error, ValueError):
    pass


class DomainError(InputError):
    """Argument outside the range where the theory applies (e.g. g <= 1)."""


class ParseError(InputError):
    pass


class NonIntegral(InputError):
    """Fixed-point profile whose Lefschetz solution is not integral."""


class NegativeMultiplicity(InputError):
    pass


class NotSmooth(InputError):
    pass


class InvariantViolation(A3Error, AssertionError):
    pass


class CrossCheckFailure(InvariantViolation):
    def __init__(self, quantity: str, left: object, right: object) -> None:
        super().__init__(f"{quantity}: {left!r} != {right!r}")
        self.quantity = quantity
        self.left = left
        self.right = right
