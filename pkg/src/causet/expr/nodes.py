"""
Expression tree node types
"""

from dataclasses import dataclass
from typing import Union

# Binary operators by printed form. Function-style operators are printed as
# calls, the rest infix with the precedence below (higher binds tighter).
FUNCTION_OPS = ('max', 'min')
COMPARISON_OPS = ('=', '!=', '<', '<=', '>', '>=')
INFIX_PRECEDENCE = {
    '|': 1,
    '&': 2,
    '=': 3, '!=': 3, '<': 3, '<=': 3, '>': 3, '>=': 3,
    '+': 4, '-': 4,
    '*': 5,
}
BINARY_OPS = FUNCTION_OPS + tuple(INFIX_PRECEDENCE)


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: 'Expression'
    right: 'Expression'

    def __post_init__(self):
        if self.op not in BINARY_OPS:
            raise ValueError(f"unknown operator {self.op!r}")


@dataclass(frozen=True)
class Not:
    """Logical negation: 1 if the operand is zero, else 0."""
    operand: 'Expression'


@dataclass(frozen=True)
class If:
    """Nonzero condition selects the first branch."""
    condition: 'Expression'
    then: 'Expression'
    otherwise: 'Expression'


Expression = Union[Const, Var, BinOp, Not, If]
