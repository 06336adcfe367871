"""Exceptions raised by the subgroup census library."""


class CensusError(Exception):
    """Base class for every error raised by this package"""


class OrderCapError(CensusError):
    """A group (or a closure in progress) exceeded the configured order cap"""

    def __init__(self, order: int, cap: int, what: str = "group"):
        self.order = order
        self.cap = cap
        super().__init__(f"{what} of order {order} exceeds the order cap {cap}")


class InvalidPresentationError(CensusError):
    """Presentation parameters are inconsistent or the table is not a group"""


class InvalidGeneratorError(CensusError):
    """A generator is not a bijection / not invertible"""


class PreconditionError(CensusError, ValueError):
    """Arguments violate the documented precondition of an operation"""


class InexactDivisionError(CensusError, ArithmeticError):
    """A closed-form count did not divide exactly; the formula was misused"""


class DomainError(CensusError, ValueError):
    """Argument outside the domain where the formula is defined"""


class ExprSyntaxError(CensusError, ValueError):
    """Group expression does not follow the grammar"""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class UnknownConstructorError(CensusError, ValueError):
    """Group expression names a constructor that does not exist"""

    def __init__(self, name: str, position: int):
        self.name = name
        self.position = position
        super().__init__(f"unknown constructor '{name}' (at position {position})")


class VerificationError(CensusError):
    """Refusal to emit results that disagree with the brute-force oracle"""


class SearchWindowError(CensusError):
    """A search was asked for beyond the window its bounds were checked for"""

    def __init__(self, value: int, limit: int, what: str):
        self.value = value
        self.limit = limit
        super().__init__(f"{what} {value} is outside the search window (at most {limit})")
