"""
Mechanisms and causal models
"""

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Dict, Mapping, Tuple

from ..expr import Const, Expression
from .signature import Signature


@dataclass(frozen=True)
class Mechanism:
    target: str
    body: Expression


@dataclass(frozen=True)
class CausalModel:
    """
    A signature plus one mechanism per endogenous variable.

    Construction does not validate: validate_model reports what is wrong
    with an arbitrary candidate model. Operations that need a valid model
    (solving, searching) call topological_order, which raises
    InvalidModelError on a cycle.
    """

    signature: Signature
    mechanisms: Tuple[Mechanism, ...]
    name: str = 'unnamed'

    @cached_property
    def equations(self) -> Dict[str, Expression]:
        """Target to body; the first mechanism wins when a target repeats."""
        table = {}
        for mechanism in self.mechanisms:
            table.setdefault(mechanism.target, mechanism.body)
        return table

    def mechanism(self, target: str) -> Expression:
        return self.equations[target]

    @cached_property
    def order(self) -> Tuple[str, ...]:
        from .graph import topological_order
        return tuple(topological_order(self))

    def with_equations(self, replacements: Mapping[str, Expression]) -> 'CausalModel':
        mechanisms = tuple(
            Mechanism(m.target, replacements[m.target]) if m.target in replacements else m
            for m in self.mechanisms
        )
        return replace(self, mechanisms=mechanisms)

    def with_constants(self, settings: Mapping[str, int]) -> 'CausalModel':
        return self.with_equations({name: Const(value) for name, value in settings.items()})
