"""
Independent brute-force implementation of the actual-cause definition.

Shares nothing with the witness search beyond the data types: solutions
come from solve_by_enumeration, every partition, every x' (the actual one
included), every w and every pair of subsets is tried, and nothing is
cached or ordered. Only suitable for tiny models; it anchors the tests.
"""

from itertools import product
from typing import Dict, List, Mapping

from ..model import CausalModel
from ..semantics import BooleanFormula, Negation, evaluate_boolean, solve_by_enumeration
from .candidates import CauseCandidate, Witness


def _holds(model: CausalModel, context: Mapping[str, int], settings: Dict[str, int],
           formula: BooleanFormula) -> bool:
    return evaluate_boolean(formula, solve_by_enumeration(model.with_constants(settings), context))


def _masks(items: List[str]):
    for mask in range(2 ** len(items)):
        yield [item for bit, item in enumerate(items) if mask >> bit & 1]


def brute_force_witnesses(model: CausalModel, context: Mapping[str, int],
                          candidate: CauseCandidate, effect: BooleanFormula) -> List[Witness]:
    """All (Z, W, x', w, z*) satisfying AC2(a) and AC2(b)."""
    signature = model.signature
    actual = solve_by_enumeration(model, context)
    x = candidate.as_dict()
    endogenous = list(signature.endogenous_names)
    others = [v for v in endogenous if v not in x]
    found = []
    for w_set in _masks(others):
        z_set = [v for v in endogenous if v not in w_set]
        z_star = {z: actual[z] for z in z_set}
        for x_values in product(*(signature.range_of(v).values for v in x)):
            x_prime = dict(zip(x, x_values))
            for w_values in product(*(signature.range_of(v).values for v in w_set)):
                w = dict(zip(w_set, w_values))
                if not _holds(model, context, {**x_prime, **w}, Negation(effect)):
                    continue
                ac2b = all(
                    _holds(model, context,
                           {**{z: z_star[z] for z in z_sub}, **{k: w[k] for k in w_sub}, **x},
                           effect)
                    for w_sub in _masks(w_set)
                    for z_sub in _masks(z_set)
                )
                if ac2b:
                    found.append(Witness(tuple(z_set), tuple(w_set), tuple(x_prime.items()),
                                         tuple(w.items()), tuple(z_star.items())))
    return found


def brute_force_is_actual_cause(model: CausalModel, context: Mapping[str, int],
                                candidate: CauseCandidate, effect: BooleanFormula) -> bool:
    actual = solve_by_enumeration(model, context)
    x = candidate.as_dict()
    if any(actual[name] != value for name, value in x.items()):
        return False
    if not evaluate_boolean(effect, actual):
        return False
    if not brute_force_witnesses(model, context, candidate, effect):
        return False
    names = list(x)
    for sub in _masks(names):
        if 0 < len(sub) < len(names):
            sub_candidate = CauseCandidate(tuple((n, x[n]) for n in sub))
            if brute_force_witnesses(model, context, sub_candidate, effect):
                return False
    return True
