"""
Named fixtures: embedded model sources, canonical contexts and the
verdicts each fixture is expected to produce
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from typing import Dict, List, Optional, Tuple

from ..dsl import ModelDocument, parse_model
from ..errors import UnknownFixtureError
from ..model import Context
from ..normality import NormalitySemantics
from .doctors import DEFAULT_DOCTORS, DEFAULT_RANK, doctors_source

logger = logging.getLogger(__name__)

LITERAL = NormalitySemantics.LITERAL
SOLUTION = NormalitySemantics.SOLUTION
BOTH = (LITERAL, SOLUTION)


class Provenance(Enum):
    # Stated outright by the worked example.
    STATED = 'stated'
    # Follows from equations reconstructed from a prose description.
    DERIVED = 'derived'
    # Computed with the brute-force oracle; the story itself is silent.
    ORACLE = 'oracle'


@dataclass(frozen=True)
class ExpectedVerdict:
    context: str
    cause: str
    effect: str
    preliminary: bool
    # None when the fixture makes no claim about the extended definition.
    extended: Optional[bool] = None
    semantics: Tuple[NormalitySemantics, ...] = BOTH
    provenance: Provenance = Provenance.STATED


@dataclass(frozen=True)
class Fixture:
    name: str
    document: ModelDocument
    contexts: Tuple[Tuple[str, Context], ...]
    expected: Tuple[ExpectedVerdict, ...]
    description: str = ''

    def context(self, name: str) -> Context:
        for label, context in self.contexts:
            if label == name:
                return dict(context)
        raise KeyError(f"{self.name} has no context named {name!r}")

    @property
    def default_context(self) -> Context:
        return dict(self.contexts[0][1])


@dataclass(frozen=True)
class _Entry:
    description: str
    contexts: Tuple[Tuple[str, Context], ...]
    expected: Tuple[ExpectedVerdict, ...]


V = ExpectedVerdict

_ENTRIES: Dict[str, _Entry] = {
    'forest-fire-disjunctive': _Entry(
        "lightning or a dropped match each suffice to burn the forest",
        (('both', {'U_L': 1, 'U_ML': 1}), ('lightning-only', {'U_L': 1, 'U_ML': 0})),
        (
            V('both', 'L=1', 'F=1', True, True),
            V('both', 'ML=1', 'F=1', True, True),
            V('lightning-only', 'L=1', 'F=1', True, True),
        ),
    ),
    'forest-fire-conjunctive': _Entry(
        "the forest burns only if both lightning and the match happen",
        (('both', {'U_L': 1, 'U_ML': 1}), ('lightning-only', {'U_L': 1, 'U_ML': 0})),
        (
            V('both', 'L=1', 'F=1', True),
            V('both', 'ML=1', 'F=1', True),
            V('both', 'L=1 & ML=1', 'F=1', False),
            V('lightning-only', 'ML=0', 'F=0', True),
        ),
    ),
    'rock-throw-3var': _Entry(
        "Suzy and Billy both throw; the bottle shatters",
        (('both-throw', {'U_ST': 1, 'U_BT': 1}),),
        (
            V('both-throw', 'ST=1', 'BS=1', True),
            V('both-throw', 'BT=1', 'BS=1', True),
        ),
    ),
    'rock-throw-5var': _Entry(
        "Suzy's rock hits first and preempts Billy's",
        (('both-throw', {'U_ST': 1, 'U_BT': 1}), ('billy-only', {'U_ST': 0, 'U_BT': 1})),
        (
            V('both-throw', 'ST=1', 'BS=1', True),
            V('both-throw', 'BT=1', 'BS=1', False),
            V('both-throw', 'SH=1', 'BS=1', True, provenance=Provenance.ORACLE),
            V('billy-only', 'BT=1', 'BS=1', True, provenance=Provenance.ORACLE),
        ),
    ),
    'bodyguard': _Entry(
        "the bodyguard's antidote neutralises poison that was never added",
        (('antidote-no-poison', {'U_A': 1, 'U_B': 1}),),
        (
            V('antidote-no-poison', 'B=1', 'VS=1', True, False),
            V('antidote-no-poison', 'A=1', 'VS=1', True, provenance=Provenance.ORACLE),
        ),
    ),
    'train-simple': _Entry(
        "the train arrives whichever way the switch is set",
        (('left', {'U_S': 1}),),
        (
            V('left', 'S=1', 'A=1', False),
        ),
    ),
    'train-blocked': _Entry(
        "the switch with explicit track-blocking variables",
        (('left-all-clear', {'U_S': 1, 'U_LB': 0, 'U_RB': 0}),),
        (
            V('left-all-clear', 'S=1', 'A=1', True, False),
        ),
    ),
    'soldiers-trumping': _Entry(
        "sergeant and major both order a march; the major's order prevails",
        (('both-order-march', {'U_S': 1, 'U_M': 1}),),
        (
            V('both-order-march', 'M=1', 'A=1', True, provenance=Provenance.ORACLE),
            V('both-order-march', 'S=1', 'A=1', True, provenance=Provenance.ORACLE),
        ),
    ),
    'door-alarm': _Entry(
        "a solid push opens the stuck door; any push trips the alarm",
        (('solid-push', {'U_P': 2}), ('normal-push', {'U_P': 1})),
        (
            V('solid-push', 'P=2', 'O=1', True, provenance=Provenance.DERIVED),
            V('solid-push', 'P=2', 'AL=1', True, provenance=Provenance.DERIVED),
            V('normal-push', 'P=1', 'AL=1', True, provenance=Provenance.DERIVED),
            V('normal-push', 'P=1', 'O=0', True, provenance=Provenance.DERIVED),
        ),
    ),
    'camping': _Entry(
        "no fire in May, so the camper camps and starts a fire in June",
        (('no-may-fire', {'U_F1': 0}),),
        (
            V('no-may-fire', 'C=1', 'F2=1', True, provenance=Provenance.DERIVED),
            V('no-may-fire', 'F1=0', 'F2=1', True, provenance=Provenance.DERIVED),
            V('no-may-fire', 'F1=0', 'C=1', True, provenance=Provenance.DERIVED),
        ),
    ),
}

# Shipped as sources only: they fail validation by construction.
NEGATIVE_FIXTURES = ('camping-cyclic', 'camping-three-valued')

_DOCTORS = 'doctors'
_NAME = re.compile(r'(?P<base>[a-z0-9-]+)(?:\((?P<n>\d+)\))?')


def _doctors_entry(n: int) -> _Entry:
    def assigned_to_first(**treats):
        context = {f"A{i}": int(i == 1) for i in range(1, n + 1)}
        context.update({f"U_T{i}": treats.get(f"T{i}", 0) for i in range(1, n + 1)})
        return context

    expected = [
        V('sickness', 'T1=0', 'S=1', True, True, BOTH),
        V('recovery', 'T1=1', 'S=0', True, True, (LITERAL,)),
    ]
    for i in range(2, n + 1):
        expected.append(V('sickness', f'T{i}=0', 'S=1', True, False, (SOLUTION,)))
    return _Entry(
        f"doctor 1 of {n} is assigned to treat Billy",
        (('sickness', assigned_to_first()), ('recovery', assigned_to_first(T1=1))),
        tuple(expected),
    )


def fixture_names() -> List[str]:
    """Loadable fixtures, in registry order."""
    names = list(_ENTRIES)
    names.insert(names.index('train-simple'), _DOCTORS)
    return names


def _size(n, suffix) -> int:
    if n is not None:
        return n
    return suffix if suffix is not None else DEFAULT_DOCTORS


def _split_name(name: str) -> Tuple[str, Optional[int]]:
    match = _NAME.fullmatch(name.strip())
    if match is None:
        raise UnknownFixtureError(name, fixture_names() + list(NEGATIVE_FIXTURES))
    n = match.group('n')
    return match.group('base'), int(n) if n is not None else None


def fixture_source(name: str, n: int = None, default_rank=DEFAULT_RANK) -> str:
    """The .cm text of any fixture, negative fixtures included."""
    base, suffix = _split_name(name)
    if base == _DOCTORS:
        return doctors_source(_size(n, suffix), default_rank)
    if base in _ENTRIES or base in NEGATIVE_FIXTURES:
        if suffix is not None:
            raise UnknownFixtureError(name, fixture_names() + list(NEGATIVE_FIXTURES))
        return (resources.files(__package__) / 'sources' / f'{base}.cm').read_text('utf-8')
    raise UnknownFixtureError(name, fixture_names() + list(NEGATIVE_FIXTURES))


def load_fixture(name: str, n: int = None, default_rank=DEFAULT_RANK) -> Fixture:
    """
    Parse and validate a named fixture. Doctors takes its size from n or a
    "doctors(4)" style name (default 3), and default_rank sets the rank of
    worlds no rule mentions.
    """
    base, suffix = _split_name(name)
    if base in NEGATIVE_FIXTURES:
        raise UnknownFixtureError(name, fixture_names())
    source = fixture_source(name, n, default_rank)
    if base == _DOCTORS:
        size = _size(n, suffix)
        entry = _doctors_entry(size)
        label = f"doctors({size})"
    else:
        entry = _ENTRIES[base]
        label = base
    document = parse_model(source, source=f"<{label}>")
    logger.info("loaded fixture %s (%d contexts, %d expected verdicts)", label,
                len(entry.contexts), len(entry.expected))
    return Fixture(label, document, entry.contexts, entry.expected, entry.description)


def load_all(doctor_sizes=(2, 3, 4)) -> List[Fixture]:
    fixtures = []
    for name in fixture_names():
        if name == _DOCTORS:
            fixtures.extend(load_fixture(_DOCTORS, n) for n in doctor_sizes)
        else:
            fixtures.append(load_fixture(name))
    return fixtures

