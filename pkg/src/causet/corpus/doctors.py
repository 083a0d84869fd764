"""
Generated source for the doctors fixture: one of n doctors is assigned to
treat Billy, Billy is sick unless some doctor treats him, and the ranking
makes "the assigned doctor treats" the normal course of events.
"""

from ..errors import PreconditionError
from ..normality import format_rank

DEFAULT_DOCTORS = 3
DEFAULT_RANK = 4


def _pattern(pairs) -> str:
    return ", ".join(f"{name}={value}" for name, value in pairs)


def doctors_source(n: int = DEFAULT_DOCTORS, default_rank=DEFAULT_RANK) -> str:
    """
    A1..An say which doctor is assigned; T1..Tn whether each treats; S = 1
    means Billy stays sick. Ranks, first match wins:
      0  nobody assigned and nobody treats
      1  doctor i assigned and only doctor i treats
      2  doctor i assigned and nobody treats
      3  doctor i assigned and some other doctor j treats
    """
    if n < 1:
        raise PreconditionError("the doctors fixture needs at least one doctor")
    doctors = range(1, n + 1)
    assigned = [f"A{i}" for i in doctors]
    treats = [f"T{i}" for i in doctors]

    def only(names, chosen, value=1):
        return [(name, value if name == chosen else 0) for name in names]

    rules = [(_pattern([(a, 0) for a in assigned] + [(t, 0) for t in treats]), 0)]
    for i in doctors:
        rules.append((_pattern(only(assigned, f"A{i}") + only(treats, f"T{i}")), 1))
    for i in doctors:
        rules.append((_pattern(only(assigned, f"A{i}") + [(t, 0) for t in treats]), 2))
    for i in doctors:
        for j in doctors:
            if i != j:
                rules.append((_pattern(only(assigned, f"A{i}") + [(f"T{j}", 1)]), 3))

    sickness = f"1 - max({', '.join(treats)})" if n > 1 else "1 - T1"
    exogenous = "  ".join(f"{name}: {{0,1}}" for name in assigned + [f"U_{t}" for t in treats])
    endogenous = "  ".join(f"{name}: {{0,1}}" for name in treats + ['S'])
    lines = [
        f"# Billy and {n} doctors.",
        f"model doctors_{n} {{",
        f"  exogenous  {{ {exogenous} }}",
        f"  endogenous {{ {endogenous} }}",
        "  equations {",
    ]
    lines.extend(f"    {t} = U_{t}" for t in treats)
    lines.append(f"    S = {sickness}")
    lines.append("  }")
    lines.append("  ranking {")
    lines.extend(f"    rule {pattern} => {rank}" for pattern, rank in rules)
    lines.append(f"    default => {format_rank(default_rank)}")
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
