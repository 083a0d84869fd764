"""
Ranking functions: ordered pattern rules with a mandatory default rank
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Mapping, Optional, Tuple, Union

from ..config import resolve_cap
from ..model import CausalModel, Signature, Violation, ViolationKind
from ..semantics import BooleanFormula, check_boolean, evaluate_boolean, worlds

logger = logging.getLogger(__name__)

INFINITY = math.inf

# A natural number, or INFINITY for impossible worlds.
Rank = Union[int, float]


def format_rank(rank: Rank) -> str:
    return 'inf' if rank == INFINITY else str(rank)


@dataclass(frozen=True)
class RankingRule:
    pattern: Tuple[Tuple[str, int], ...]
    rank: Rank

    def matches(self, world: Mapping[str, int]) -> bool:
        return all(world[name] == value for name, value in self.pattern)


@dataclass(frozen=True)
class RankingFunction:
    """First matching rule wins; worlds no rule matches get default_rank."""

    rules: Tuple[RankingRule, ...]
    default_rank: Rank

    @classmethod
    def constant(cls, rank: Rank = 0) -> 'RankingFunction':
        return cls((), rank)


def rank_world(ranking: RankingFunction, world: Mapping[str, int]) -> Rank:
    for rule in ranking.rules:
        if rule.matches(world):
            return rule.rank
    return ranking.default_rank


def _valid_rank(rank) -> bool:
    return rank == INFINITY or (isinstance(rank, int) and not isinstance(rank, bool) and rank >= 0)


def validate_ranking(signature: Signature, ranking: RankingFunction) -> List[Violation]:
    violations = []
    if not _valid_rank(ranking.default_rank):
        violations.append(Violation(ViolationKind.INVALID_RANK, None,
                                    f"default rank {ranking.default_rank!r} is not in N or inf"))
    for position, rule in enumerate(ranking.rules, 1):
        if not _valid_rank(rule.rank):
            violations.append(Violation(ViolationKind.INVALID_RANK, None,
                                        f"rule {position}: rank {rule.rank!r} is not in N or inf"))
        seen = set()
        for name, value in rule.pattern:
            if name not in signature:
                violations.append(Violation(ViolationKind.UNKNOWN_REFERENCE, name,
                                            f"rule {position} mentions an undeclared variable"))
                continue
            if name in seen:
                violations.append(Violation(ViolationKind.DUPLICATE_VARIABLE, name,
                                            f"rule {position} sets the variable twice"))
            seen.add(name)
            if value not in signature.range_of(name):
                violations.append(Violation(ViolationKind.OUT_OF_RANGE, name,
                                            f"rule {position}: {value} is out of range"))
    return violations


@dataclass(frozen=True)
class ExtendedCausalModel:
    """A causal model together with a ranking over its worlds."""

    base: CausalModel
    ranking: RankingFunction

    @property
    def signature(self) -> Signature:
        return self.base.signature

    @property
    def name(self) -> str:
        return self.base.name


@lru_cache(maxsize=4096)
def _min_rank(signature: Signature, ranking: RankingFunction,
              fixed: Tuple[Tuple[str, int], ...], cap: int) -> Rank:
    best = INFINITY
    for world in worlds(signature, cap, fixed=dict(fixed)):
        best = min(best, rank_world(ranking, world))
        if best == 0:
            break
    return best


def min_rank(extended: ExtendedCausalModel, fixed: Mapping[str, int],
             max_worlds: int = None) -> Rank:
    """Least rank of any world (solution or not) that extends the fixed values."""
    cap = resolve_cap(max_worlds, 'max_worlds')
    return _min_rank(extended.signature, extended.ranking, tuple(sorted(fixed.items())), cap)


def typically(extended: ExtendedCausalModel, antecedent: BooleanFormula,
              consequent: BooleanFormula, max_worlds: int = None) -> bool:
    """
    "If antecedent then typically consequent": the consequent holds in every
    least-ranked world satisfying the antecedent. Worlds range over the full
    assignment space; with no antecedent world the statement holds vacuously.
    """
    signature = extended.signature
    check_boolean(signature, antecedent, allow_exogenous=True)
    check_boolean(signature, consequent, allow_exogenous=True)
    cap = resolve_cap(max_worlds, 'max_worlds')
    best: Optional[Rank] = None
    holds = True
    for world in worlds(signature, cap):
        if not evaluate_boolean(antecedent, world):
            continue
        rank = rank_world(extended.ranking, world)
        if best is None or rank < best:
            best, holds = rank, evaluate_boolean(consequent, world)
        elif rank == best:
            holds = holds and evaluate_boolean(consequent, world)
    logger.debug("typically: least antecedent rank %s", best)
    return holds
