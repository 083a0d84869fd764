"""
Evaluation and traversal of expressions
"""

import operator
from typing import Callable, FrozenSet, Mapping

from ..errors import ExpressionError, UnboundVariableError
from .nodes import BinOp, Const, Expression, If, Not, Var

_BINARY = {
    'max': max,
    'min': min,
    '&': min,
    '|': max,
    '+': operator.add,
    '-': operator.sub,
    '*': operator.mul,
    '=': lambda a, b: int(a == b),
    '!=': lambda a, b: int(a != b),
    '<': lambda a, b: int(a < b),
    '<=': lambda a, b: int(a <= b),
    '>': lambda a, b: int(a > b),
    '>=': lambda a, b: int(a >= b),
}


def eval_expression(expr: Expression, env: Mapping[str, int]) -> int:
    """Evaluate expr with Python integers, so arithmetic never overflows."""
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Var):
        try:
            return env[expr.name]
        except KeyError:
            raise UnboundVariableError(expr.name) from None
    if isinstance(expr, BinOp):
        return _BINARY[expr.op](eval_expression(expr.left, env),
                                eval_expression(expr.right, env))
    if isinstance(expr, Not):
        return 1 - int(eval_expression(expr.operand, env) != 0)
    if isinstance(expr, If):
        if eval_expression(expr.condition, env) != 0:
            return eval_expression(expr.then, env)
        return eval_expression(expr.otherwise, env)
    raise ExpressionError(f"not an expression: {expr!r}")


def free_variables(expr: Expression) -> FrozenSet[str]:
    if isinstance(expr, Const):
        return frozenset()
    if isinstance(expr, Var):
        return frozenset((expr.name,))
    if isinstance(expr, BinOp):
        return free_variables(expr.left) | free_variables(expr.right)
    if isinstance(expr, Not):
        return free_variables(expr.operand)
    if isinstance(expr, If):
        return (free_variables(expr.condition) | free_variables(expr.then)
                | free_variables(expr.otherwise))
    raise ExpressionError(f"not an expression: {expr!r}")


def replace_variables(expr: Expression, replace: Callable[[str], Expression]) -> Expression:
    """Rebuild expr with every variable reference swapped for replace(name)."""
    if isinstance(expr, Const):
        return expr
    if isinstance(expr, Var):
        return replace(expr.name)
    if isinstance(expr, BinOp):
        return BinOp(expr.op, replace_variables(expr.left, replace),
                     replace_variables(expr.right, replace))
    if isinstance(expr, Not):
        return Not(replace_variables(expr.operand, replace))
    if isinstance(expr, If):
        return If(replace_variables(expr.condition, replace),
                  replace_variables(expr.then, replace),
                  replace_variables(expr.otherwise, replace))
    raise ExpressionError(f"not an expression: {expr!r}")
