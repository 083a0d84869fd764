"""
Variables, ranges and signatures
"""

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple

from ..errors import ContextError

# A context assigns every exogenous variable, a world every variable.
Context = Dict[str, int]
World = Dict[str, int]

_IDENTIFIER = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')


def is_identifier(name: str) -> bool:
    return isinstance(name, str) and _IDENTIFIER.fullmatch(name) is not None


@dataclass(frozen=True)
class Range:
    """Finite set of integer values, kept in declaration order."""

    values: Tuple[int, ...]

    @classmethod
    def of(cls, values: Iterable[int]) -> 'Range':
        return cls(tuple(values))

    @classmethod
    def interval(cls, low: int, high: int) -> 'Range':
        return cls(tuple(range(low, high + 1)))

    @classmethod
    def boolean(cls) -> 'Range':
        return cls((0, 1))

    @cached_property
    def members(self) -> FrozenSet[int]:
        return frozenset(self.values)

    def __contains__(self, value) -> bool:
        return value in self.members

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Variable:
    name: str
    range: Range


@dataclass(frozen=True)
class Signature:
    """
    Exogenous and endogenous variables. Declaration order (exogenous first)
    is the canonical variable order for every deterministic tie-break.
    """

    exogenous: Tuple[Variable, ...]
    endogenous: Tuple[Variable, ...]

    @classmethod
    def build(cls, exogenous: Mapping[str, Iterable[int]],
              endogenous: Mapping[str, Iterable[int]]) -> 'Signature':
        return cls(
            tuple(Variable(name, Range.of(values)) for name, values in exogenous.items()),
            tuple(Variable(name, Range.of(values)) for name, values in endogenous.items()),
        )

    @cached_property
    def variables(self) -> Tuple[Variable, ...]:
        return self.exogenous + self.endogenous

    @cached_property
    def _by_name(self) -> Dict[str, Variable]:
        table = {}
        for variable in self.variables:
            table.setdefault(variable.name, variable)
        return table

    @cached_property
    def _index(self) -> Dict[str, int]:
        index = {}
        for position, variable in enumerate(self.variables):
            index.setdefault(variable.name, position)
        return index

    @cached_property
    def exogenous_names(self) -> Tuple[str, ...]:
        return tuple(v.name for v in self.exogenous)

    @cached_property
    def endogenous_names(self) -> Tuple[str, ...]:
        return tuple(v.name for v in self.endogenous)

    @cached_property
    def names(self) -> Tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    @cached_property
    def _endogenous_set(self) -> FrozenSet[str]:
        return frozenset(self.endogenous_names)

    @cached_property
    def _exogenous_set(self) -> FrozenSet[str]:
        return frozenset(self.exogenous_names)

    def __contains__(self, name) -> bool:
        return name in self._by_name

    def variable(self, name: str) -> Variable:
        return self._by_name[name]

    def range_of(self, name: str) -> Range:
        return self._by_name[name].range

    def is_exogenous(self, name: str) -> bool:
        return name in self._exogenous_set

    def is_endogenous(self, name: str) -> bool:
        return name in self._endogenous_set

    def index(self, name: str) -> int:
        return self._index[name]

    def sort(self, names: Iterable[str]) -> List[str]:
        """Order names canonically (declaration order)."""
        return sorted(names, key=self._index.__getitem__)


def check_context(signature: Signature, assignment: Mapping[str, int]) -> Context:
    """Return a context covering every exogenous variable, or raise ContextError."""
    unknown = [name for name in assignment if not signature.is_exogenous(name)]
    if unknown:
        raise ContextError(f"not exogenous variables: {', '.join(unknown)}")
    missing = [name for name in signature.exogenous_names if name not in assignment]
    if missing:
        raise ContextError(f"context is missing exogenous variables: {', '.join(missing)}",
                           missing=missing)
    for name in signature.exogenous_names:
        if assignment[name] not in signature.range_of(name):
            raise ContextError(
                f"value {assignment[name]} is out of range for {name} "
                f"{set(signature.range_of(name).values)}"
            )
    return {name: assignment[name] for name in signature.exogenous_names}
