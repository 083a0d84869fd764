"""
The actual-cause definition (AC1, AC2, AC3), the but-for test and cause
enumeration
"""

import logging
from itertools import combinations, product
from typing import Callable, List, Mapping, Optional, Tuple

from ..errors import EffectNotSatisfied, PreconditionError
from ..model import CausalModel
from ..semantics import BooleanFormula, CounterfactualEvaluator, check_boolean, formula_variables
from .candidates import CauseCandidate, Clause, Statistics, Verdict, Witness, check_candidate
from .witness import Admissible, WitnessSearch

logger = logging.getLogger(__name__)

# Builds the normality test for one (model, context) pair; see normality.extended.
AdmissibilityFactory = Optional[Callable[[CounterfactualEvaluator], Admissible]]


def _ac1(evaluator: CounterfactualEvaluator, candidate: CauseCandidate,
         effect: BooleanFormula) -> bool:
    return evaluator.holds({}, candidate.formula) and evaluator.holds({}, effect)


def require_ac1(evaluator: CounterfactualEvaluator, candidate: CauseCandidate,
                effect: BooleanFormula) -> None:
    if not _ac1(evaluator, candidate, effect):
        raise PreconditionError(f"AC1 fails: {candidate} or the effect is false in the actual world")


def check_ac1(model: CausalModel, context: Mapping[str, int], candidate: CauseCandidate,
              effect: BooleanFormula) -> bool:
    check_candidate(model.signature, candidate)
    check_boolean(model.signature, effect)
    return _ac1(CounterfactualEvaluator(model, context), candidate, effect)


def but_for(model: CausalModel, context: Mapping[str, int], candidate: CauseCandidate,
            effect: BooleanFormula) -> bool:
    """Some x' != x with [X <- x'] not effect, no contingency (W empty)."""
    check_candidate(model.signature, candidate)
    check_boolean(model.signature, effect)
    evaluator = CounterfactualEvaluator(model, context)
    require_ac1(evaluator, candidate, effect)
    signature = model.signature
    names = candidate.variables
    actual = tuple(value for _, value in candidate.conjuncts)
    for values in product(*(signature.range_of(name).values for name in names)):
        if values != actual and not evaluator.holds(dict(zip(names, values)), effect):
            return True
    return False


def _sub_candidates(candidate: CauseCandidate):
    for size in range(1, len(candidate)):
        for conjuncts in combinations(candidate.conjuncts, size):
            yield CauseCandidate(conjuncts)


def decide(evaluator: CounterfactualEvaluator, candidate: CauseCandidate,
           effect: BooleanFormula, admissibility: AdmissibilityFactory = None,
           max_vars: int = None) -> Verdict:
    """
    Apply the definition on a prepared evaluator. Clauses are tried in the
    order AC1, AC3, AC2; a negative verdict names the first that fails.
    """
    statistics = Statistics()
    if not _ac1(evaluator, candidate, effect):
        return Verdict(False, Clause.AC1, None, statistics)

    admissible = admissibility(evaluator) if admissibility is not None else None
    for sub in _sub_candidates(candidate):
        search = WitnessSearch(evaluator, sub, effect, admissible, statistics, max_vars)
        if search.first() is not None:
            logger.debug("%s is not minimal: %s already qualifies", candidate, sub)
            return Verdict(False, Clause.AC3, None, statistics, ac3_blocker=sub)

    search = WitnessSearch(evaluator, candidate, effect, admissible, statistics, max_vars)
    witness = search.first()
    if witness is None:
        return Verdict(False, Clause.AC2, None, statistics, rejected=search.rejected)
    return Verdict(True, None, witness, statistics)


def is_actual_cause(model: CausalModel, context: Mapping[str, int], candidate: CauseCandidate,
                    effect: BooleanFormula, exclude_effect_variables: bool = False,
                    max_vars: int = None) -> Verdict:
    check_candidate(model.signature, candidate)
    check_boolean(model.signature, effect)
    if exclude_effect_variables and set(candidate.variables) & formula_variables(effect):
        raise PreconditionError("candidate mentions a variable of the effect")
    verdict = decide(CounterfactualEvaluator(model, context), candidate, effect,
                     max_vars=max_vars)
    logger.info("%s -> %s in %s: %s", candidate, effect, model.name,
                "cause" if verdict.is_cause else f"not a cause ({verdict.failed_clause.value})")
    return verdict


def enumerate_causes(model: CausalModel, context: Mapping[str, int], effect: BooleanFormula,
                     max_conjuncts: int = 1, exclude_effect_variables: bool = True,
                     admissibility: AdmissibilityFactory = None,
                     max_vars: int = None) -> List[Tuple[CauseCandidate, Witness]]:
    """
    Every actual-valued candidate of at most max_conjuncts conjuncts that is
    an actual cause, ordered by size and then declaration order. Supersets
    of a cause already found are skipped: AC3 rules them out.
    """
    if max_conjuncts < 1:
        raise PreconditionError("max_conjuncts must be positive")
    check_boolean(model.signature, effect)
    evaluator = CounterfactualEvaluator(model, context)
    if not evaluator.holds({}, effect):
        raise EffectNotSatisfied("the effect does not hold in the actual world")

    excluded = formula_variables(effect) if exclude_effect_variables else frozenset()
    names = [v for v in model.signature.endogenous_names if v not in excluded]
    found: List[Tuple[CauseCandidate, Witness]] = []
    for size in range(1, min(max_conjuncts, len(names)) + 1):
        for chosen in combinations(names, size):
            if any(set(c.variables) < set(chosen) for c, _ in found):
                continue
            candidate = CauseCandidate(tuple((v, evaluator.actual[v]) for v in chosen))
            verdict = decide(evaluator, candidate, effect, admissibility, max_vars)
            if verdict.is_cause:
                found.append((candidate, verdict.witness))
    logger.info("%d cause(s) of %s in %s", len(found), effect, model.name)
    return found
