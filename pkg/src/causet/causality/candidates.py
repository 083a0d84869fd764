"""
Cause candidates, witnesses and verdicts
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from ..errors import FormulaError
from ..model import Signature
from ..semantics import BooleanFormula, conjunction

Pairs = Tuple[Tuple[str, int], ...]


class Clause(Enum):
    AC1 = 'AC1'
    AC2 = 'AC2'
    AC3 = 'AC3'


@dataclass(frozen=True)
class CauseCandidate:
    """Conjunction X1=x1 & ... & Xk=xk over distinct endogenous variables."""

    conjuncts: Pairs

    @classmethod
    def of(cls, pairs: Union[Mapping[str, int], Iterable[Tuple[str, int]]]) -> 'CauseCandidate':
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        return cls(tuple((name, value) for name, value in items))

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.conjuncts)

    def as_dict(self) -> Dict[str, int]:
        return dict(self.conjuncts)

    @property
    def formula(self) -> BooleanFormula:
        return conjunction(self.conjuncts)

    def __len__(self):
        return len(self.conjuncts)

    def __str__(self):
        return " & ".join(f"{name}={value}" for name, value in self.conjuncts)


def check_candidate(signature: Signature, candidate: CauseCandidate) -> None:
    if not candidate.conjuncts:
        raise FormulaError("a cause candidate needs at least one conjunct")
    if len(set(candidate.variables)) != len(candidate.conjuncts):
        raise FormulaError("cause candidate repeats a variable")
    for name, value in candidate.conjuncts:
        if name not in signature:
            raise FormulaError(f"unknown variable {name}")
        if not signature.is_endogenous(name):
            raise FormulaError(f"{name} is not endogenous")
        if value not in signature.range_of(name):
            raise FormulaError(f"value {value} is out of range for {name}")


@dataclass(frozen=True)
class Witness:
    """
    The (Z, W, x', w, z*) certificate for AC2. Sets are tuples in
    declaration order; z_star holds the actual values of Z.
    """

    z_set: Tuple[str, ...]
    w_set: Tuple[str, ...]
    x_prime: Pairs
    w_values: Pairs
    z_star: Pairs

    def as_dict(self) -> dict:
        return {
            'z_set': list(self.z_set),
            'w_set': list(self.w_set),
            'x_prime': dict(self.x_prime),
            'w_values': dict(self.w_values),
            'z_star': dict(self.z_star),
        }


@dataclass
class Statistics:
    partitions: int = 0
    settings: int = 0
    subset_checks: int = 0
    normality_checks: int = 0

    def as_dict(self) -> Dict[str, int]:
        return {
            'partitions': self.partitions,
            'settings': self.settings,
            'subset_checks': self.subset_checks,
            'normality_checks': self.normality_checks,
        }


@dataclass(frozen=True)
class WitnessCheck:
    """Per-clause outcome of checking one witness; None means not reached."""

    witness: Witness
    ac2a: bool
    ac2b: Optional[bool] = None
    normality: Optional[bool] = None
    # First failing (W', Z') pair for AC2(b).
    counterexample: Optional[Tuple[Tuple[str, ...], Tuple[str, ...]]] = None

    @property
    def passed(self) -> bool:
        return bool(self.ac2a and self.ac2b and self.normality is not False)

    def __bool__(self):
        return self.passed

    def as_dict(self) -> dict:
        result = {
            'witness': self.witness.as_dict(),
            'ac2a': self.ac2a,
            'ac2b': self.ac2b,
            'normality': self.normality,
            'counterexample': None,
        }
        if self.counterexample is not None:
            w_sub, z_sub = self.counterexample
            result['counterexample'] = {'w_subset': list(w_sub), 'z_subset': list(z_sub)}
        return result


@dataclass(frozen=True)
class Verdict:
    is_cause: bool
    failed_clause: Optional[Clause]
    witness: Optional[Witness]
    statistics: Statistics = field(default_factory=Statistics)
    # First AC2(a)-passing attempt that was turned down, for negative verdicts.
    rejected: Optional[WitnessCheck] = None
    # Sub-conjunction that already satisfies AC1 and AC2 when AC3 fails.
    ac3_blocker: Optional[CauseCandidate] = None

    def as_dict(self) -> dict:
        return {
            'is_cause': self.is_cause,
            'failed_clause': self.failed_clause.value if self.failed_clause else None,
            'witness': self.witness.as_dict() if self.witness else None,
            'statistics': self.statistics.as_dict(),
            'rejected': self.rejected.as_dict() if self.rejected else None,
            'ac3_blocker': dict(self.ac3_blocker.conjuncts) if self.ac3_blocker else None,
        }
