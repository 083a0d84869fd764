"""Exception hierarchy shared by every causet module."""

from typing import Iterable, Optional


class CausetError(Exception):
    """Base class for all errors raised by causet"""
    pass


class ConfigurationError(CausetError):
    """Raised when an environment setting cannot be interpreted"""
    pass


class ExpressionError(CausetError):
    """Raised when an expression cannot be evaluated"""
    pass


class UnboundVariableError(ExpressionError):
    """Raised when an expression references a variable missing from its environment"""

    def __init__(self, name: str):
        super().__init__(f"unbound variable '{name}'")
        self.name = name


class InvalidModelError(CausetError):
    """Raised when an operation requires a valid model and gets an invalid one"""
    pass


class InterventionError(CausetError):
    """Raised when intervention settings do not fit the model"""
    pass


class ContextError(CausetError):
    """Raised when a context is partial, has unknown keys or out-of-range values"""

    def __init__(self, message: str, missing: Iterable[str] = ()):
        super().__init__(message)
        self.missing = tuple(missing)


class FormulaError(CausetError):
    """Raised when a formula does not fit the signature it is evaluated against"""
    pass


class SearchSpaceTooLarge(CausetError):
    """Raised when an enumeration would exceed its configured cap"""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} too large: {size} exceeds the cap of {cap}")
        self.size = size
        self.cap = cap


class PreconditionError(CausetError):
    """Raised when an operation's precondition does not hold"""
    pass


class EffectNotSatisfied(PreconditionError):
    """Raised when the effect formula is false in the actual world"""
    pass


class WitnessStructureError(CausetError):
    """Raised when a witness is inconsistent with the model it is checked against"""
    pass


class UnknownFixtureError(CausetError):
    """Raised when a fixture name is not in the registry"""

    def __init__(self, name: str, available: Iterable[str]):
        self.available = sorted(available)
        super().__init__(
            f"unknown fixture '{name}'; available: {', '.join(self.available)}"
        )


class ParseError(CausetError):
    """Located diagnostic produced by the model-description parser"""

    kind = "parse error"

    def __init__(self, message: str, line: int, column: int, source: Optional[str] = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(str(self))

    def __str__(self):
        where = f"{self.source}:" if self.source else ""
        return f"{where}{self.line}:{self.column}: {self.kind}: {self.message}"


class LexicalError(ParseError):
    kind = "lexical error"


class DslSyntaxError(ParseError):
    kind = "syntax error"


class SemanticError(ParseError):
    kind = "semantic error"


class DuplicateIdentifierError(SemanticError):
    kind = "duplicate identifier"
