"""
Renaming, value recoding and isomorphism search
"""

from itertools import permutations
from typing import Dict, Mapping, Optional, Sequence

from ..errors import InvalidModelError
from ..expr import BinOp, Const, Expression, If, Var, replace_variables
from .causal_model import CausalModel, Mechanism
from .signature import Range, Signature, Variable


def rename_variables(model: CausalModel, mapping: Mapping[str, str]) -> CausalModel:
    """Apply an injective renaming; names not in mapping keep their name."""
    names = model.signature.names
    renamed = [mapping.get(name, name) for name in names]
    if len(set(renamed)) != len(set(names)):
        raise InvalidModelError("renaming is not injective on the model's variables")

    def rename(name: str) -> str:
        return mapping.get(name, name)

    signature = Signature(
        tuple(Variable(rename(v.name), v.range) for v in model.signature.exogenous),
        tuple(Variable(rename(v.name), v.range) for v in model.signature.endogenous),
    )
    mechanisms = tuple(
        Mechanism(rename(m.target), replace_variables(m.body, lambda n: Var(rename(n))))
        for m in model.mechanisms
    )
    return CausalModel(signature, mechanisms, model.name)


def _lookup(subject: Expression, pairs: Sequence[tuple]) -> Expression:
    """Nested conditional sending subject's value a to b for each (a, b)."""
    *init, (_, last) = pairs
    result: Expression = Const(last)
    for source, image in reversed(init):
        result = If(BinOp('=', subject, Const(source)), Const(image), result)
    return result


def recode_values(model: CausalModel, codes: Mapping[str, Mapping[int, int]]) -> CausalModel:
    """
    Recode values with a bijection per variable (old value -> new value).

    Each mechanism reads its inputs through a decoding conditional and
    writes its output through an encoding one, so the recoded model has
    exactly the solutions of the original under the recoding.
    """
    signature = model.signature
    for name, code in codes.items():
        values = signature.range_of(name).values
        if sorted(code) != sorted(values) or len(set(code.values())) != len(code):
            raise InvalidModelError(f"code for {name} is not a bijection on its range")

    def recode_range(variable: Variable) -> Variable:
        code = codes.get(variable.name)
        if code is None:
            return variable
        return Variable(variable.name, Range(tuple(code[v] for v in variable.range.values)))

    def decode(name: str) -> Expression:
        code = codes.get(name)
        if code is None:
            return Var(name)
        return _lookup(Var(name), [(new, old) for old, new in code.items()])

    mechanisms = []
    for mechanism in model.mechanisms:
        body = replace_variables(mechanism.body, decode)
        code = codes.get(mechanism.target)
        if code is not None:
            body = _lookup(body, list(code.items()))
        mechanisms.append(Mechanism(mechanism.target, body))
    recoded = Signature(tuple(map(recode_range, signature.exogenous)),
                        tuple(map(recode_range, signature.endogenous)))
    return CausalModel(recoded, tuple(mechanisms), model.name)


def _shape(model: CausalModel):
    return (
        frozenset(model.signature.exogenous),
        frozenset(model.signature.endogenous),
        frozenset(model.equations.items()),
    )


def find_isomorphism(first: CausalModel, second: CausalModel) -> Optional[Dict[str, str]]:
    """
    Search for a renaming of first's variables (exogenous to exogenous,
    endogenous to endogenous, ranges kept) under which its equations are
    structurally identical to second's. Brute force over permutations, so
    meant for desk-scale models.
    """
    a, b = first.signature, second.signature
    if len(a.exogenous) != len(b.exogenous) or len(a.endogenous) != len(b.endogenous):
        return None
    target = _shape(second)
    for exogenous in permutations(b.exogenous_names):
        if any(a.range_of(x) != b.range_of(y) for x, y in zip(a.exogenous_names, exogenous)):
            continue
        for endogenous in permutations(b.endogenous_names):
            mapping = dict(zip(a.exogenous_names + a.endogenous_names, exogenous + endogenous))
            if any(a.range_of(x) != b.range_of(mapping[x]) for x in a.endogenous_names):
                continue
            if _shape(rename_variables(first, mapping)) == target:
                return mapping
    return None
