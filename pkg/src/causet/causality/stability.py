"""
Directed paths and verdict comparison across alternative models of one story
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ..errors import CausetError, FormulaError
from ..model import CausalModel, dependency_digraph
from ..semantics import BooleanFormula, CounterfactualEvaluator, check_boolean, formula_variables
from .candidates import CauseCandidate, Verdict, check_candidate
from .definition import decide

logger = logging.getLogger(__name__)

Path = Tuple[str, ...]
Topology = Dict[Tuple[str, str], Tuple[Path, ...]]


def directed_paths(model: CausalModel, source: str, target: str) -> List[List[str]]:
    """
    Simple directed paths from source to target in the dependency graph
    (exogenous variables included), shortest first and then by declaration
    order of the variables along the path.
    """
    signature = model.signature
    for name in (source, target):
        if name not in signature:
            raise FormulaError(f"unknown variable {name}")
    if source == target:
        return [[source]]
    graph = dependency_digraph(model, include_exogenous=True)
    paths = [list(p) for p in nx.all_simple_paths(graph, source, target)]
    paths.sort(key=lambda p: (len(p), [signature.index(n) for n in p]))
    return paths


def path_topology(model: CausalModel, candidate: CauseCandidate,
                  effect: BooleanFormula) -> Topology:
    topology = {}
    for cause in candidate.variables:
        for target in sorted(formula_variables(effect)):
            paths = directed_paths(model, cause, target)
            topology[(cause, target)] = tuple(tuple(p) for p in paths)
    return topology


@dataclass(frozen=True)
class ModelVerdict:
    model: str
    verdict: Optional[Verdict] = None
    error: Optional[str] = None
    topology: Optional[Topology] = None


@dataclass(frozen=True)
class StabilityReport:
    rows: Tuple[ModelVerdict, ...]
    stable: bool
    # One flag per adjacent pair of models: did the cause-to-effect paths change?
    topology_changed: Tuple[bool, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            'stable': self.stable,
            'models': [
                {
                    'model': row.model,
                    'verdict': row.verdict.as_dict() if row.verdict else None,
                    'error': row.error,
                    'paths': None if row.topology is None else {
                        f"{c}->{e}": [list(p) for p in paths]
                        for (c, e), paths in row.topology.items()
                    },
                }
                for row in self.rows
            ],
            'topology_changed': list(self.topology_changed),
        }


def compare_verdicts(models: Sequence[CausalModel], contexts: Sequence[Mapping[str, int]],
                     candidate: CauseCandidate, effect: BooleanFormula,
                     max_vars: int = None) -> StabilityReport:
    """
    Decide the same query in each model. The table is stable when every
    model answers and all answers agree; per-model errors are reported in
    their row and make the table unstable.
    """
    if len(models) != len(contexts):
        raise CausetError("need exactly one context per model")
    rows = []
    for model, context in zip(models, contexts):
        try:
            check_candidate(model.signature, candidate)
            check_boolean(model.signature, effect)
            verdict = decide(CounterfactualEvaluator(model, context), candidate, effect,
                             max_vars=max_vars)
            rows.append(ModelVerdict(model.name, verdict, None,
                                     path_topology(model, candidate, effect)))
        except CausetError as e:
            logger.info("comparison row %s failed: %s", model.name, e)
            rows.append(ModelVerdict(model.name, None, str(e), None))

    answers = [row.verdict.is_cause if row.verdict else None for row in rows]
    stable = None not in answers and len(set(answers)) <= 1
    changed = tuple(
        a.topology is None or b.topology is None or a.topology != b.topology
        for a, b in zip(rows, rows[1:])
    )
    return StabilityReport(tuple(rows), stable, changed)
