"""
Model validation: identifiers, ranges, mechanism coverage, acyclicity and
range discipline. Problems are returned as data, never raised.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ..config import resolve_cap
from ..errors import ExpressionError
from ..expr import eval_expression, free_variables
from ..utils.enumeration import assignments, space_size
from .causal_model import CausalModel
from .signature import is_identifier

logger = logging.getLogger(__name__)


class ViolationKind(Enum):
    INVALID_IDENTIFIER = 'invalid identifier'
    DUPLICATE_VARIABLE = 'duplicate variable'
    EMPTY_RANGE = 'empty range'
    DUPLICATE_RANGE_VALUE = 'duplicate range value'
    NO_ENDOGENOUS = 'no endogenous variables'
    MISSING_MECHANISM = 'missing mechanism'
    EXTRA_MECHANISM = 'extra mechanism'
    DUPLICATE_MECHANISM = 'duplicate mechanism'
    UNKNOWN_REFERENCE = 'unknown reference'
    SELF_REFERENCE = 'self reference'
    CYCLE = 'cycle'
    OUT_OF_RANGE = 'out of range'
    TOTALITY_UNVERIFIED = 'totality unverified'
    INVALID_RANK = 'invalid rank'


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    variable: Optional[str]
    message: str
    # Input assignment for OUT_OF_RANGE, in declaration order.
    witness: Optional[Tuple[Tuple[str, int], ...]] = None
    # Closed path (first == last) for CYCLE.
    cycle: Optional[Tuple[str, ...]] = None

    @property
    def is_error(self) -> bool:
        return self.kind is not ViolationKind.TOTALITY_UNVERIFIED

    def __str__(self):
        subject = f"{self.variable}: " if self.variable else ""
        return f"{self.kind.value}: {subject}{self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def errors(self) -> List[Violation]:
        return [v for v in self.violations if v.is_error]

    @property
    def warnings(self) -> List[Violation]:
        return [v for v in self.violations if not v.is_error]

    @property
    def is_valid(self) -> bool:
        return not self.errors

    def of_kind(self, kind: ViolationKind) -> List[Violation]:
        return [v for v in self.violations if v.kind is kind]

    def __iter__(self):
        return iter(self.violations)

    def __len__(self):
        return len(self.violations)


def validate_model(model: CausalModel, totality_cap: int = None) -> ValidationReport:
    """
    Check every invariant of a causal model and list each violation with the
    offending variable. Range discipline is checked by enumerating all inputs
    of each mechanism; past totality_cap combinations the mechanism is
    reported as TOTALITY_UNVERIFIED instead.
    """
    cap = resolve_cap(totality_cap, 'totality_cap')
    signature = model.signature
    violations: List[Violation] = []

    seen: Dict[str, bool] = {}
    declared = [(True, v) for v in signature.exogenous] + [(False, v) for v in signature.endogenous]
    for exogenous, variable in declared:
        name = variable.name
        if not is_identifier(name):
            violations.append(Violation(ViolationKind.INVALID_IDENTIFIER, name,
                                        f"{name!r} is not a valid identifier"))
        if name in seen:
            where = "exogenous and endogenous" if seen[name] != exogenous else "twice"
            violations.append(Violation(ViolationKind.DUPLICATE_VARIABLE, name,
                                        f"declared {where}"))
        else:
            seen[name] = exogenous
        if not variable.range.values:
            violations.append(Violation(ViolationKind.EMPTY_RANGE, name, "range is empty"))
        elif len(variable.range.members) != len(variable.range.values):
            violations.append(Violation(ViolationKind.DUPLICATE_RANGE_VALUE, name,
                                        "range lists a value more than once"))

    if not signature.endogenous:
        violations.append(Violation(ViolationKind.NO_ENDOGENOUS, None,
                                    "at least one endogenous variable is required"))

    targets = set()
    for mechanism in model.mechanisms:
        target = mechanism.target
        if target not in signature:
            violations.append(Violation(ViolationKind.EXTRA_MECHANISM, target,
                                        "equation for an undeclared variable"))
        elif signature.is_exogenous(target):
            violations.append(Violation(ViolationKind.EXTRA_MECHANISM, target,
                                        "equation for an exogenous variable"))
        elif target in targets:
            violations.append(Violation(ViolationKind.DUPLICATE_MECHANISM, target,
                                        "more than one equation"))
        targets.add(target)
    for name in signature.endogenous_names:
        if name not in targets:
            violations.append(Violation(ViolationKind.MISSING_MECHANISM, name, "no equation"))

    checkable = []
    for name in signature.endogenous_names:
        if name not in model.equations:
            continue
        body = model.equations[name]
        references = free_variables(body)
        unknown = sorted(r for r in references if r not in signature)
        for reference in unknown:
            violations.append(Violation(ViolationKind.UNKNOWN_REFERENCE, name,
                                        f"equation references undeclared {reference}"))
        if name in references:
            violations.append(Violation(ViolationKind.SELF_REFERENCE, name,
                                        "equation references its own target"))
        if not unknown and name not in references:
            checkable.append(name)

    violations.extend(_cycles(model))
    for name in checkable:
        violation = _check_range_discipline(model, name, cap)
        if violation is not None:
            violations.append(violation)

    report = ValidationReport(tuple(violations))
    logger.debug("validated %s: %d violation(s)", model.name, len(report))
    return report


def _cycles(model: CausalModel) -> List[Violation]:
    from .graph import dependency_digraph

    signature = model.signature
    graph = dependency_digraph(model)
    graph.remove_edges_from(list(nx.selfloop_edges(graph)))
    found = []
    for cycle in nx.simple_cycles(graph):
        start = min(range(len(cycle)), key=lambda i: signature.index(cycle[i]))
        rotated = tuple(cycle[start:] + cycle[:start])
        found.append(rotated + (rotated[0],))
    found.sort(key=lambda path: [signature.index(name) for name in path])
    return [
        Violation(ViolationKind.CYCLE, path[0], "dependency cycle " + " -> ".join(path),
                  cycle=path)
        for path in found
    ]


def _check_range_discipline(model: CausalModel, name: str, cap: int) -> Optional[Violation]:
    signature = model.signature
    body = model.equations[name]
    inputs = signature.sort(free_variables(body))
    ranges = [signature.range_of(i).values for i in inputs]
    size = space_size(ranges)
    if size > cap:
        logger.warning("totality of %s unverified: %d input combinations", name, size)
        return Violation(ViolationKind.TOTALITY_UNVERIFIED, name,
                         f"{size} input combinations exceed the cap of {cap}")
    target_range = signature.range_of(name)
    for env in assignments(inputs, ranges):
        try:
            value = eval_expression(body, env)
        except ExpressionError as e:
            return Violation(ViolationKind.OUT_OF_RANGE, name, str(e),
                             witness=tuple(env.items()))
        if value not in target_range:
            shown = ", ".join(f"{k}={v}" for k, v in env.items())
            return Violation(ViolationKind.OUT_OF_RANGE, name,
                             f"yields {value} at {shown or 'no inputs'}",
                             witness=tuple(env.items()))
    return None
