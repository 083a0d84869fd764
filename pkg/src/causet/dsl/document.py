"""
Parsed model documents
"""

from dataclasses import dataclass, field
from typing import Mapping, Optional, Tuple

from ..model import CausalModel
from ..normality import ExtendedCausalModel, RankingFunction

Location = Tuple[int, int]


@dataclass(frozen=True)
class ModelDocument:
    """
    A causal model with its optional ranking. Equality is structural: the
    source text and the recorded locations do not take part in it.
    """

    model: CausalModel
    ranking: Optional[RankingFunction] = None
    text: str = field(default='', compare=False)
    # Variable name to (line, column) of its declaration.
    locations: Mapping[str, Location] = field(default_factory=dict, compare=False)
    # Variable name to (line, column) of its equation.
    equation_locations: Mapping[str, Location] = field(default_factory=dict, compare=False)

    @property
    def name(self) -> str:
        return self.model.name

    @property
    def extended(self) -> ExtendedCausalModel:
        """The extended model; without a ranking block every world has rank 0."""
        return ExtendedCausalModel(self.model, self.ranking or RankingFunction.constant(0))

    def location_of(self, name: str) -> Location:
        return self.equation_locations.get(name) or self.locations.get(name) or (1, 1)
