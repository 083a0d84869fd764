"""
Dependency graph of a causal model
"""

import logging
from typing import List, Set, Tuple

import networkx as nx

from ..errors import InvalidModelError
from ..expr import free_variables
from .causal_model import CausalModel

logger = logging.getLogger(__name__)


def dependency_digraph(model: CausalModel, include_exogenous: bool = False) -> nx.DiGraph:
    """
    Directed graph with an edge Y -> X whenever Y occurs in the body of X's
    mechanism. Nodes are added in declaration order. Exogenous variables
    (and their outgoing edges) are included only on request.
    """
    signature = model.signature
    graph = nx.DiGraph()
    if include_exogenous:
        graph.add_nodes_from(signature.exogenous_names)
    graph.add_nodes_from(signature.endogenous_names)
    for target, body in model.equations.items():
        if not signature.is_endogenous(target):
            continue
        for source in free_variables(body):
            if signature.is_endogenous(source) or (include_exogenous and signature.is_exogenous(source)):
                graph.add_edge(source, target)
    return graph


def dependency_graph(model: CausalModel, include_exogenous: bool = False) -> Set[Tuple[str, str]]:
    return set(dependency_digraph(model, include_exogenous).edges)


def topological_order(model: CausalModel) -> List[str]:
    """Endogenous variables, dependencies first, ties broken by declaration order."""
    if any(target in free_variables(body) for target, body in model.equations.items()):
        raise InvalidModelError("a mechanism references its own target")
    graph = dependency_digraph(model)
    try:
        return list(nx.lexicographical_topological_sort(graph, key=model.signature.index))
    except nx.NetworkXUnfeasible:
        logger.debug("cycle in %s", model.name)
        raise InvalidModelError(f"model '{model.name}' has a dependency cycle") from None
