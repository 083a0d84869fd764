"""
Built-in fixture models with their canonical contexts and expected verdicts
"""

from .doctors import doctors_source
from .registry import (BOTH, NEGATIVE_FIXTURES, ExpectedVerdict, Fixture, Provenance,
                       fixture_names, fixture_source, load_all, load_fixture)

__all__ = [
    'BOTH', 'NEGATIVE_FIXTURES', 'ExpectedVerdict', 'Fixture', 'Provenance', 'doctors_source',
    'fixture_names', 'fixture_source', 'load_all', 'load_fixture',
]
