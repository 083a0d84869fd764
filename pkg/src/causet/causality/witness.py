"""
AC2 witness checking and canonical-order witness search
"""

import logging
from itertools import product
from typing import Callable, Iterator, Mapping, Optional

from ..config import resolve_cap
from ..errors import SearchSpaceTooLarge, WitnessStructureError
from ..model import CausalModel
from ..semantics import BooleanFormula, CounterfactualEvaluator, Negation, check_boolean
from ..utils.enumeration import subsets_by_size
from .candidates import CauseCandidate, Statistics, Witness, WitnessCheck, check_candidate

logger = logging.getLogger(__name__)

# Receives the AC2(a) settings X <- x', W <- w and says whether the
# normality condition admits them. None means every setting is admitted.
Admissible = Optional[Callable[[Mapping[str, int]], bool]]


def check_ac2(evaluator: CounterfactualEvaluator, candidate: CauseCandidate,
              effect: BooleanFormula, witness: Witness, statistics: Statistics,
              admissible: Admissible = None, stop_early: bool = True) -> WitnessCheck:
    """
    AC2(a): [X <- x', W <- w] not effect (plus the normality condition when
    admissible is given). AC2(b): [X <- x, W' <- w, Z' <- z*] effect for
    every W' of W and every Z' of Z minus X; X is already held at x, so Z'
    ranges over the rest of Z. Subsets are tried by increasing size, W'
    outermost, and the first failing pair is recorded.
    """
    x_prime = dict(witness.x_prime)
    w_values = dict(witness.w_values)
    z_star = dict(witness.z_star)

    counterfactual = dict(x_prime)
    counterfactual.update(w_values)
    ac2a = evaluator.holds(counterfactual, Negation(effect))

    normality = None
    if admissible is not None and (ac2a or not stop_early):
        statistics.normality_checks += 1
        normality = admissible(counterfactual)
    if stop_early and not (ac2a and normality is not False):
        return WitnessCheck(witness, ac2a, None, normality)

    held = candidate.as_dict()
    z_rest = [z for z in witness.z_set if z not in held]
    for w_subset in subsets_by_size(witness.w_set):
        for z_subset in subsets_by_size(z_rest):
            statistics.subset_checks += 1
            settings = dict(held)
            settings.update((w, w_values[w]) for w in w_subset)
            settings.update((z, z_star[z]) for z in z_subset)
            if not evaluator.holds(settings, effect):
                return WitnessCheck(witness, ac2a, False, normality, (w_subset, z_subset))
    return WitnessCheck(witness, ac2a, True, normality)


def verify_witness(model: CausalModel, context: Mapping[str, int], candidate: CauseCandidate,
                   effect: BooleanFormula, witness: Witness,
                   admissible: Admissible = None) -> WitnessCheck:
    """Check a caller-supplied witness clause by clause (all clauses evaluated)."""
    signature = model.signature
    check_candidate(signature, candidate)
    check_boolean(signature, effect)
    evaluator = CounterfactualEvaluator(model, context)

    z_set, w_set = set(witness.z_set), set(witness.w_set)
    endogenous = set(signature.endogenous_names)
    if z_set & w_set:
        raise WitnessStructureError(f"Z and W overlap on {sorted(z_set & w_set)}")
    if z_set | w_set != endogenous:
        raise WitnessStructureError("Z and W must partition the endogenous variables")
    if not set(candidate.variables) <= z_set:
        raise WitnessStructureError("candidate variables must lie in Z")
    if set(dict(witness.x_prime)) != set(candidate.variables):
        raise WitnessStructureError("x' must set exactly the candidate variables")
    if set(dict(witness.w_values)) != w_set:
        raise WitnessStructureError("w must set exactly the variables of W")
    for name, value in witness.x_prime + witness.w_values:
        if value not in signature.range_of(name):
            raise WitnessStructureError(f"value {value} is out of range for {name}")
    z_star = dict(witness.z_star)
    if set(z_star) != z_set or any(evaluator.actual[z] != z_star[z] for z in z_set):
        raise WitnessStructureError("z* must equal the actual values of Z")

    return check_ac2(evaluator, candidate, effect, witness, Statistics(), admissible,
                     stop_early=False)


class WitnessSearch:
    """
    Enumerates witness attempts in canonical order: W by increasing size and
    then lexicographically in declaration order, then x' over the candidate
    ranges (skipping the actual x), then w over the ranges of W.
    """

    def __init__(self, evaluator: CounterfactualEvaluator, candidate: CauseCandidate,
                 effect: BooleanFormula, admissible: Admissible = None,
                 statistics: Statistics = None, max_vars: int = None):
        signature = evaluator.model.signature
        cap = resolve_cap(max_vars, 'max_vars')
        if len(signature.endogenous) > cap:
            raise SearchSpaceTooLarge("witness search space (|V|)", len(signature.endogenous), cap)
        self.evaluator = evaluator
        self.candidate = candidate
        self.effect = effect
        self.admissible = admissible
        self.statistics = statistics if statistics is not None else Statistics()
        self.rejected: Optional[WitnessCheck] = None

    def checks(self) -> Iterator[WitnessCheck]:
        signature = self.evaluator.model.signature
        actual = self.evaluator.actual
        held = self.candidate.as_dict()
        x_names = self.candidate.variables
        x_actual = tuple(held[name] for name in x_names)
        others = [v for v in signature.endogenous_names if v not in held]

        for w_set in subsets_by_size(others):
            self.statistics.partitions += 1
            z_set = tuple(v for v in signature.endogenous_names if v not in w_set)
            z_star = tuple((z, actual[z]) for z in z_set)
            for x_values in product(*(signature.range_of(x).values for x in x_names)):
                if x_values == x_actual:
                    continue
                for w_values in product(*(signature.range_of(w).values for w in w_set)):
                    self.statistics.settings += 1
                    witness = Witness(z_set, tuple(w_set), tuple(zip(x_names, x_values)),
                                      tuple(zip(w_set, w_values)), z_star)
                    check = check_ac2(self.evaluator, self.candidate, self.effect, witness,
                                      self.statistics, self.admissible)
                    if not check.passed and check.ac2a and self.rejected is None:
                        self.rejected = check
                    yield check

    def witnesses(self) -> Iterator[Witness]:
        for check in self.checks():
            if check.passed:
                logger.debug("witness for %s: W=%s", self.candidate, check.witness.w_set)
                yield check.witness

    def first(self) -> Optional[Witness]:
        return next(self.witnesses(), None)


def iter_witnesses(model: CausalModel, context: Mapping[str, int], candidate: CauseCandidate,
                   effect: BooleanFormula, max_vars: int = None) -> Iterator[Witness]:
    """Every AC2 witness, canonical order first."""
    check_candidate(model.signature, candidate)
    check_boolean(model.signature, effect)
    evaluator = CounterfactualEvaluator(model, context)
    return WitnessSearch(evaluator, candidate, effect, max_vars=max_vars).witnesses()


def find_witness(model: CausalModel, context: Mapping[str, int], candidate: CauseCandidate,
                 effect: BooleanFormula, max_vars: int = None) -> Optional[Witness]:
    from .definition import require_ac1

    check_candidate(model.signature, candidate)
    check_boolean(model.signature, effect)
    evaluator = CounterfactualEvaluator(model, context)
    require_ac1(evaluator, candidate, effect)
    return WitnessSearch(evaluator, candidate, effect, max_vars=max_vars).first()
