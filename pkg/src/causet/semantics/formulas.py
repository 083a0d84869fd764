"""
Primitive events, boolean formulas and causal formulas
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Mapping, Tuple, Union

from ..errors import FormulaError
from ..model import Signature


@dataclass(frozen=True)
class PrimitiveEvent:
    variable: str
    value: int


@dataclass(frozen=True)
class Truth:
    value: bool


@dataclass(frozen=True)
class And:
    left: 'BooleanFormula'
    right: 'BooleanFormula'


@dataclass(frozen=True)
class Or:
    left: 'BooleanFormula'
    right: 'BooleanFormula'


@dataclass(frozen=True)
class Negation:
    operand: 'BooleanFormula'


BooleanFormula = Union[PrimitiveEvent, Truth, And, Or, Negation]


@dataclass(frozen=True)
class CausalFormula:
    """[Y1 <- y1, ..., Yk <- yk] body; no interventions means plain body."""

    interventions: Tuple[Tuple[str, int], ...]
    body: BooleanFormula

    @classmethod
    def plain(cls, body: BooleanFormula) -> 'CausalFormula':
        return cls((), body)


def evaluate_boolean(formula: BooleanFormula, world: Mapping[str, int]) -> bool:
    if isinstance(formula, PrimitiveEvent):
        return world[formula.variable] == formula.value
    if isinstance(formula, Truth):
        return formula.value
    if isinstance(formula, And):
        return evaluate_boolean(formula.left, world) and evaluate_boolean(formula.right, world)
    if isinstance(formula, Or):
        return evaluate_boolean(formula.left, world) or evaluate_boolean(formula.right, world)
    if isinstance(formula, Negation):
        return not evaluate_boolean(formula.operand, world)
    raise FormulaError(f"not a boolean formula: {formula!r}")


def formula_variables(formula: BooleanFormula) -> FrozenSet[str]:
    if isinstance(formula, PrimitiveEvent):
        return frozenset((formula.variable,))
    if isinstance(formula, Truth):
        return frozenset()
    if isinstance(formula, (And, Or)):
        return formula_variables(formula.left) | formula_variables(formula.right)
    if isinstance(formula, Negation):
        return formula_variables(formula.operand)
    raise FormulaError(f"not a boolean formula: {formula!r}")


def events(formula: BooleanFormula) -> Iterable[PrimitiveEvent]:
    if isinstance(formula, PrimitiveEvent):
        yield formula
    elif isinstance(formula, (And, Or)):
        yield from events(formula.left)
        yield from events(formula.right)
    elif isinstance(formula, Negation):
        yield from events(formula.operand)


def conjunction(pairs: Iterable[Tuple[str, int]]) -> BooleanFormula:
    """Left-nested conjunction of primitive events; true when empty."""
    result = None
    for variable, value in pairs:
        event = PrimitiveEvent(variable, value)
        result = event if result is None else And(result, event)
    return Truth(True) if result is None else result


def check_boolean(signature: Signature, formula: BooleanFormula,
                  allow_exogenous: bool = False) -> None:
    for event in events(formula):
        if event.variable not in signature:
            raise FormulaError(f"unknown variable {event.variable}")
        if not allow_exogenous and not signature.is_endogenous(event.variable):
            raise FormulaError(f"{event.variable} is not endogenous")
        if event.value not in signature.range_of(event.variable):
            raise FormulaError(f"value {event.value} is out of range for {event.variable}")


def check_formula(signature: Signature, formula: CausalFormula) -> None:
    seen = set()
    for variable, value in formula.interventions:
        if variable not in signature:
            raise FormulaError(f"unknown variable {variable}")
        if not signature.is_endogenous(variable):
            raise FormulaError(f"cannot intervene on exogenous {variable}")
        if variable in seen:
            raise FormulaError(f"duplicate intervention variable {variable}")
        if value not in signature.range_of(variable):
            raise FormulaError(f"value {value} is out of range for {variable}")
        seen.add(variable)
    check_boolean(signature, formula.body)
