"""
Canonical text for models, rankings, expressions and formulas. Whatever
print_model emits, parse_model reads back to a structurally equal document.
"""

from typing import List, Optional, Union

from ..expr import BinOp, Const, Expression, If, Not, Var
from ..expr.nodes import COMPARISON_OPS, FUNCTION_OPS, INFIX_PRECEDENCE
from ..model import CausalModel, Range, Variable
from ..normality import RankingFunction, format_rank
from ..semantics import And, BooleanFormula, CausalFormula, Negation, Or, PrimitiveEvent, Truth
from .document import ModelDocument

INDENT = '  '


def format_range(range_: Range) -> str:
    values = range_.values
    if len(values) >= 3 and all(b == a + 1 for a, b in zip(values, values[1:])):
        return f"{{{values[0]}..{values[-1]}}}"
    return "{" + ",".join(str(v) for v in values) + "}"


def _infix(expr: Expression) -> Optional[int]:
    if isinstance(expr, BinOp) and expr.op in INFIX_PRECEDENCE:
        return INFIX_PRECEDENCE[expr.op]
    return None


def format_expression(expr: Expression) -> str:
    if isinstance(expr, Const):
        return str(expr.value)
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Not):
        inner = format_expression(expr.operand)
        return f"!({inner})" if _infix(expr.operand) is not None else f"!{inner}"
    if isinstance(expr, If):
        parts = (expr.condition, expr.then, expr.otherwise)
        return "if(" + ", ".join(format_expression(p) for p in parts) + ")"
    if expr.op in FUNCTION_OPS:
        # Left-nested chains print flat; the parser nests them the same way.
        arguments: List[Expression] = [expr.right]
        left = expr.left
        while isinstance(left, BinOp) and left.op == expr.op:
            arguments.append(left.right)
            left = left.left
        arguments.append(left)
        return f"{expr.op}(" + ", ".join(format_expression(a) for a in reversed(arguments)) + ")"

    precedence = INFIX_PRECEDENCE[expr.op]
    left = format_expression(expr.left)
    right = format_expression(expr.right)
    left_precedence, right_precedence = _infix(expr.left), _infix(expr.right)
    if left_precedence is not None and left_precedence < precedence:
        left = f"({left})"
    if right_precedence is not None and right_precedence <= precedence:
        right = f"({right})"
    return f"{left} {expr.op} {right}"


def _equation_body(expr: Expression) -> str:
    text = format_expression(expr)
    if isinstance(expr, BinOp) and expr.op in COMPARISON_OPS:
        return f"({text})"
    return text


def _declarations(keyword: str, variables) -> str:
    if not variables:
        return f"{INDENT}{keyword} {{ }}"
    body = "  ".join(format_variable(v) for v in variables)
    return f"{INDENT}{keyword} {{ {body} }}"


def format_ranking(ranking: RankingFunction) -> List[str]:
    lines = [f"{INDENT}ranking {{"]
    for rule in ranking.rules:
        pattern = ", ".join(f"{name}={value}" for name, value in rule.pattern)
        head = f"rule {pattern} =>" if pattern else "rule =>"
        lines.append(f"{INDENT * 2}{head} {format_rank(rule.rank)}")
    lines.append(f"{INDENT * 2}default => {format_rank(ranking.default_rank)}")
    lines.append(f"{INDENT}}}")
    return lines


def print_model(document: Union[ModelDocument, CausalModel],
                ranking: Optional[RankingFunction] = None) -> str:
    """
    Canonical form: declaration and equation order preserved, one equation
    per line, two-space indentation, minimal parentheses, trailing newline.
    """
    if isinstance(document, CausalModel):
        document = ModelDocument(document, ranking)
    model = document.model
    lines = [f"model {model.name} {{"]
    lines.append(_declarations('exogenous', model.signature.exogenous))
    lines.append(_declarations('endogenous', model.signature.endogenous))
    if model.mechanisms:
        lines.append(f"{INDENT}equations {{")
        for mechanism in model.mechanisms:
            lines.append(f"{INDENT * 2}{mechanism.target} = {_equation_body(mechanism.body)}")
        lines.append(f"{INDENT}}}")
    else:
        lines.append(f"{INDENT}equations {{ }}")
    if document.ranking is not None:
        lines.extend(format_ranking(document.ranking))
    lines.append("}")
    return "\n".join(lines) + "\n"


_BOOLEAN_PRECEDENCE = {Or: 1, And: 2}


def format_boolean(formula: BooleanFormula, parent: int = 0) -> str:
    if isinstance(formula, PrimitiveEvent):
        return f"{formula.variable}={formula.value}"
    if isinstance(formula, Truth):
        return 'true' if formula.value else 'false'
    if isinstance(formula, Negation):
        operand = formula.operand
        inner = format_boolean(operand, 3)
        if isinstance(operand, (Negation, Truth)) or inner.startswith('('):
            return f"!{inner}"
        return f"!({inner})"
    precedence = _BOOLEAN_PRECEDENCE[type(formula)]
    symbol = '|' if isinstance(formula, Or) else '&'
    text = (f"{format_boolean(formula.left, precedence)} {symbol} "
            f"{format_boolean(formula.right, precedence + 1)}")
    return f"({text})" if precedence < parent else text


def format_formula(formula: CausalFormula) -> str:
    if not formula.interventions:
        return format_boolean(formula.body)
    settings = ", ".join(f"{name}<-{value}" for name, value in formula.interventions)
    return f"[{settings}]({format_boolean(formula.body)})"


def format_variable(variable: Variable) -> str:
    return f"{variable.name}: {format_range(variable.range)}"
