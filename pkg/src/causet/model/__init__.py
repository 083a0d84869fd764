"""
Signatures, mechanisms, causal models and their validation
"""

from .signature import (Context, Range, Signature, Variable, World, check_context,
                        is_identifier)
from .causal_model import CausalModel, Mechanism
from .validation import ValidationReport, Violation, ViolationKind, validate_model
from .graph import dependency_digraph, dependency_graph, topological_order
from .transform import find_isomorphism, recode_values, rename_variables

__all__ = [
    'CausalModel', 'Context', 'Mechanism', 'Range', 'Signature', 'ValidationReport',
    'Variable', 'Violation', 'ViolationKind', 'World', 'check_context',
    'dependency_digraph', 'dependency_graph', 'find_isomorphism', 'is_identifier',
    'recode_values', 'rename_variables', 'topological_order', 'validate_model',
]
