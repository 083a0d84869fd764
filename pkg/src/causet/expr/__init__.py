"""
Integer expression language used for mechanism bodies
"""

from .nodes import BinOp, Const, Expression, If, Not, Var
from .evaluation import eval_expression, free_variables, replace_variables

__all__ = [
    'BinOp', 'Const', 'Expression', 'If', 'Not', 'Var',
    'eval_expression', 'free_variables', 'replace_variables',
]
