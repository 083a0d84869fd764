"""
Solutions, interventions and the satisfaction relation for causal formulas
"""

from .formulas import (And, BooleanFormula, CausalFormula, Negation, Or, PrimitiveEvent, Truth,
                       check_boolean, check_formula, conjunction, evaluate_boolean,
                       formula_variables)
from .solver import (CounterfactualEvaluator, contexts, intervene, satisfies,
                     satisfies_all_contexts, solve, solve_by_enumeration, worlds)

__all__ = [
    'And', 'BooleanFormula', 'CausalFormula', 'CounterfactualEvaluator', 'Negation', 'Or',
    'PrimitiveEvent', 'Truth', 'check_boolean', 'check_formula', 'conjunction', 'contexts',
    'evaluate_boolean', 'formula_variables', 'intervene', 'satisfies',
    'satisfies_all_contexts', 'solve', 'solve_by_enumeration', 'worlds',
]
