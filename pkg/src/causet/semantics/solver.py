"""
Solving acyclic models, intervention surgery and formula satisfaction
"""

import logging
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from ..config import resolve_cap
from ..errors import InterventionError, InvalidModelError
from ..expr import eval_expression
from ..model import CausalModel, Context, Signature, World, check_context
from ..utils.enumeration import assignments
from .formulas import BooleanFormula, CausalFormula, check_formula, evaluate_boolean

logger = logging.getLogger(__name__)

Settings = Union[Mapping[str, int], Iterable[Tuple[str, int]]]


def check_settings(signature: Signature, settings: Settings) -> Dict[str, int]:
    """Validate intervention settings and return them as a dict."""
    pairs = settings.items() if isinstance(settings, Mapping) else settings
    checked: Dict[str, int] = {}
    for variable, value in pairs:
        if variable not in signature:
            raise InterventionError(f"unknown variable {variable}")
        if not signature.is_endogenous(variable):
            raise InterventionError(f"cannot intervene on exogenous variable {variable}")
        if value not in signature.range_of(variable):
            raise InterventionError(f"value {value} is out of range for {variable}")
        if variable in checked:
            raise InterventionError(f"duplicate intervention on {variable}")
        checked[variable] = value
    return checked


def intervene(model: CausalModel, settings: Settings) -> CausalModel:
    """M with each listed mechanism replaced by a constant; model itself is untouched."""
    return model.with_constants(check_settings(model.signature, settings))


def _require_mechanisms(model: CausalModel) -> None:
    missing = [n for n in model.signature.endogenous_names if n not in model.equations]
    if missing:
        raise InvalidModelError(f"no equation for {', '.join(missing)}")


def _solve(model: CausalModel, context: Mapping[str, int], overrides: Mapping[str, int]) -> World:
    # Surgery only removes edges, so the unmodified topological order stays valid.
    world = dict(context)
    for name in model.order:
        if name in overrides:
            world[name] = overrides[name]
        else:
            world[name] = eval_expression(model.equations[name], world)
    return world


def solve(model: CausalModel, context: Mapping[str, int]) -> World:
    """The unique world extending context that satisfies every mechanism."""
    _require_mechanisms(model)
    return _solve(model, check_context(model.signature, context), {})


def solve_by_enumeration(model: CausalModel, context: Mapping[str, int]) -> World:
    """
    Brute-force oracle for solve: try every endogenous assignment extending
    the context and keep those that satisfy all mechanisms.
    """
    _require_mechanisms(model)
    context = check_context(model.signature, context)
    signature = model.signature
    names = signature.endogenous_names
    solutions = []
    for candidate in assignments(names, [signature.range_of(n).values for n in names]):
        world = dict(context)
        world.update(candidate)
        if all(eval_expression(model.equations[n], world) == world[n] for n in names):
            solutions.append(world)
    if len(solutions) != 1:
        raise InvalidModelError(f"expected exactly one solution, found {len(solutions)}")
    return solutions[0]


def satisfies(model: CausalModel, context: Mapping[str, int], formula: CausalFormula) -> bool:
    check_formula(model.signature, formula)
    _require_mechanisms(model)
    context = check_context(model.signature, context)
    world = _solve(model, context, dict(formula.interventions))
    return evaluate_boolean(formula.body, world)


def contexts(signature: Signature, cap: int = None) -> Iterator[Context]:
    names = signature.exogenous_names
    return assignments(names, [signature.range_of(n).values for n in names],
                       cap=resolve_cap(cap, 'max_contexts'), what="context space")


def worlds(signature: Signature, cap: int = None,
           fixed: Mapping[str, int] = None) -> Iterator[World]:
    """Every world in declaration order, or only those extending fixed."""
    names = signature.names
    fixed = fixed or {}
    ranges = [(fixed[n],) if n in fixed else signature.range_of(n).values for n in names]
    return assignments(names, ranges, cap=resolve_cap(cap, 'max_worlds'), what="world space")


def satisfies_all_contexts(model: CausalModel, formula: CausalFormula,
                           max_contexts: int = None) -> bool:
    check_formula(model.signature, formula)
    _require_mechanisms(model)
    settings = dict(formula.interventions)
    for context in contexts(model.signature, max_contexts):
        if not evaluate_boolean(formula.body, _solve(model, context, settings)):
            logger.debug("%s fails in context %s", model.name, context)
            return False
    return True


class CounterfactualEvaluator:
    """
    Solutions of one model in one context under many interventions,
    memoized by the intervention settings. The witness searches ask the
    same counterfactual many times.
    """

    def __init__(self, model: CausalModel, context: Mapping[str, int]):
        _require_mechanisms(model)
        self.model = model
        self.context = check_context(model.signature, context)
        self._cache: Dict[Tuple[Tuple[str, int], ...], World] = {}
        self.actual = self.world({})

    def world(self, settings: Mapping[str, int]) -> World:
        key = tuple(sorted(settings.items()))
        world = self._cache.get(key)
        if world is None:
            world = _solve(self.model, self.context, settings)
            self._cache[key] = world
        return world

    def holds(self, settings: Mapping[str, int], formula: BooleanFormula) -> bool:
        return evaluate_boolean(formula, self.world(settings))
