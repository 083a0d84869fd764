"""
Extended causal models: ranking functions over worlds, typicality and the
normality-restricted actual-cause check
"""

from .ranking import (INFINITY, ExtendedCausalModel, RankingFunction, RankingRule, format_rank,
                      min_rank, rank_world, typically, validate_ranking)
from .extended import (NormalitySemantics, enumerate_causes_extended, is_actual_cause_extended,
                       normality_admissibility)

__all__ = [
    'INFINITY', 'ExtendedCausalModel', 'NormalitySemantics', 'RankingFunction', 'RankingRule',
    'enumerate_causes_extended', 'format_rank', 'is_actual_cause_extended', 'min_rank',
    'normality_admissibility', 'rank_world', 'typically', 'validate_ranking',
]
