from typing import Any, Optional


class GextError(Exception):
    """Base class for every error raised by gext_lab."""


class ConfigurationError(GextError, ValueError):
    pass


class FieldMismatchError(GextError, ValueError):
    pass


class DivisionByZeroError(GextError, ZeroDivisionError):
    pass


class TowerSyntaxError(GextError, ValueError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class ReducibleDefiningPolynomial(GextError, ValueError):
    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class UnknownIrreducibility(GextError, ValueError):
    pass


class PrecisionError(GextError):
    """Numeric roots could not be separated at the working precision."""


class PrecisionCapExceeded(GextError):
    pass


class SubgroupCapExceeded(GextError):
    pass


class PrimitiveElementNotFound(GextError):
    pass


class ConjugatorNotFound(GextError):
    pass


class NotGStable(GextError):
    pass


class TheoremViolation(GextError):
    def __init__(
        self, theorem_id: str, message: str, witness: Optional[Any] = None
    ) -> None:
        super().__init__(f"{theorem_id}: {message}")
        self.theorem_id = theorem_id
        self.witness = witness
