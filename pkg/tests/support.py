"""
Shared helpers: fixture queries and a seeded generator of small random models
"""

import os
import random
from typing import Dict, List, Optional, Tuple

from causet.causality import CauseCandidate
from causet.dsl import ModelDocument, parse_boolean, parse_candidate
from causet.expr import BinOp, Const, Expression, If, Not, Var
from causet.model import CausalModel, Mechanism, Range, Signature, Variable
from causet.normality import INFINITY, RankingFunction, RankingRule
from causet.semantics import BooleanFormula

SEED = 20101
PROPERTY_CASES = int(os.getenv('CAUSET_PROPERTY_CASES', '1000'))
FUZZ_CASES = int(os.getenv('CAUSET_FUZZ_CASES', '5000'))

_OPERATORS = ('max', 'min', '&', '|', '+', '-', '*', '=', '!=', '<', '<=', '>', '>=')


def query(fixture, expected) -> Tuple[Dict[str, int], CauseCandidate, BooleanFormula]:
    """Context, candidate and effect of one expected verdict of a fixture."""
    signature = fixture.document.model.signature
    return (fixture.context(expected.context),
            parse_candidate(expected.cause, signature),
            parse_boolean(expected.effect, signature))


def _random_expression(rng: random.Random, inputs: List[str], depth: int) -> Expression:
    if depth == 0 or rng.random() < 0.3:
        if inputs and rng.random() < 0.75:
            return Var(rng.choice(inputs))
        return Const(rng.randint(-1, 2))
    kind = rng.random()
    if kind < 0.6:
        return BinOp(rng.choice(_OPERATORS), _random_expression(rng, inputs, depth - 1),
                     _random_expression(rng, inputs, depth - 1))
    if kind < 0.75:
        return Not(_random_expression(rng, inputs, depth - 1))
    return If(_random_expression(rng, inputs, depth - 1),
              _random_expression(rng, inputs, depth - 1),
              _random_expression(rng, inputs, depth - 1))


def _clamp(expr: Expression, high: int) -> Expression:
    return BinOp('min', BinOp('max', expr, Const(0)), Const(high))


def random_model(rng: random.Random, max_endogenous: int = 4) -> CausalModel:
    """
    An acyclic model with 1-2 exogenous and 1-max_endogenous endogenous
    variables over {0,1} or {0,1,2}. Bodies are clamped into range, and
    declaration and equation order are shuffled independently of the
    dependency order.
    """
    exogenous = [Variable(f"U{i}", Range.interval(0, rng.choice((1, 2))))
                 for i in range(rng.randint(1, 2))]
    order = [Variable(f"V{i}", Range.interval(0, rng.choice((1, 2))))
             for i in range(rng.randint(1, max_endogenous))]
    mechanisms = []
    for position, variable in enumerate(order):
        inputs = [v.name for v in exogenous] + [v.name for v in order[:position]]
        body = _random_expression(rng, inputs, rng.randint(0, 2))
        mechanisms.append(Mechanism(variable.name, _clamp(body, variable.range.values[-1])))
    declared = list(order)
    rng.shuffle(declared)
    rng.shuffle(mechanisms)
    return CausalModel(Signature(tuple(exogenous), tuple(declared)), tuple(mechanisms), 'random')


def random_ranking(rng: random.Random, signature: Signature) -> RankingFunction:
    rules = []
    for _ in range(rng.randint(0, 4)):
        names = rng.sample(signature.names, rng.randint(1, min(2, len(signature.names))))
        pattern = tuple((n, rng.choice(signature.range_of(n).values)) for n in names)
        rules.append(RankingRule(pattern, rng.choice((0, 1, 2, 3, INFINITY))))
    return RankingFunction(tuple(rules), rng.choice((0, 1, 2, INFINITY)))


def random_context(rng: random.Random, signature: Signature) -> Dict[str, int]:
    return {n: rng.choice(signature.range_of(n).values) for n in signature.exogenous_names}


def random_document(rng: random.Random) -> ModelDocument:
    model = random_model(rng)
    ranking: Optional[RankingFunction] = None
    if rng.random() < 0.5:
        ranking = random_ranking(rng, model.signature)
    return ModelDocument(model, ranking)
