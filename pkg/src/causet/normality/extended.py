"""
The normality-restricted actual-cause check: an AC2(a) witness must be
realised by a world at least as normal as the actual one
"""

import logging
from enum import Enum
from typing import Callable, List, Mapping, Tuple

from ..causality import (AdmissibilityFactory, CauseCandidate, Verdict, Witness, check_candidate,
                         decide, enumerate_causes)
from ..semantics import BooleanFormula, CounterfactualEvaluator, check_boolean
from .ranking import INFINITY, ExtendedCausalModel, min_rank, rank_world

logger = logging.getLogger(__name__)


class NormalitySemantics(Enum):
    # Some world of the full assignment space sets X=x', W=w and is no less normal.
    LITERAL = 'literal'
    # The world the intervention X <- x', W <- w actually produces is no less normal.
    SOLUTION = 'solution'


def normality_admissibility(extended: ExtendedCausalModel,
                            semantics: NormalitySemantics = NormalitySemantics.LITERAL,
                            max_worlds: int = None) -> AdmissibilityFactory:
    ranking = extended.ranking

    def factory(evaluator: CounterfactualEvaluator) -> Callable[[Mapping[str, int]], bool]:
        actual_rank = rank_world(ranking, evaluator.actual)
        logger.debug("actual world of %s has rank %s", extended.name, actual_rank)
        if actual_rank == INFINITY:
            return lambda settings: True
        if semantics is NormalitySemantics.SOLUTION:
            return lambda settings: rank_world(ranking, evaluator.world(settings)) <= actual_rank
        return lambda settings: min_rank(extended, settings, max_worlds) <= actual_rank

    return factory


def is_actual_cause_extended(extended: ExtendedCausalModel, context: Mapping[str, int],
                             candidate: CauseCandidate, effect: BooleanFormula,
                             semantics: NormalitySemantics = NormalitySemantics.LITERAL,
                             max_vars: int = None, max_worlds: int = None) -> Verdict:
    model = extended.base
    check_candidate(model.signature, candidate)
    check_boolean(model.signature, effect)
    verdict = decide(CounterfactualEvaluator(model, context), candidate, effect,
                     normality_admissibility(extended, semantics, max_worlds), max_vars)
    logger.info("%s -> %s in %s (%s normality): %s", candidate, effect, model.name,
                semantics.value,
                "cause" if verdict.is_cause else f"not a cause ({verdict.failed_clause.value})")
    return verdict


def enumerate_causes_extended(extended: ExtendedCausalModel, context: Mapping[str, int],
                              effect: BooleanFormula, max_conjuncts: int = 1,
                              semantics: NormalitySemantics = NormalitySemantics.LITERAL,
                              exclude_effect_variables: bool = True, max_vars: int = None,
                              max_worlds: int = None) -> List[Tuple[CauseCandidate, Witness]]:
    return enumerate_causes(extended.base, context, effect, max_conjuncts,
                            exclude_effect_variables,
                            normality_admissibility(extended, semantics, max_worlds), max_vars)
