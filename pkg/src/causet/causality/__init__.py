"""
Actual causation: witness search, the but-for test, cause enumeration and
path/stability analysis
"""

from .candidates import (CauseCandidate, Clause, Statistics, Verdict, Witness, WitnessCheck,
                         check_candidate)
from .witness import Admissible, WitnessSearch, find_witness, iter_witnesses, verify_witness
from .definition import (AdmissibilityFactory, but_for, check_ac1, decide, enumerate_causes,
                         is_actual_cause, require_ac1)
from .oracle import brute_force_is_actual_cause, brute_force_witnesses
from .stability import (ModelVerdict, StabilityReport, compare_verdicts, directed_paths,
                        path_topology)

__all__ = [
    'Admissible', 'AdmissibilityFactory', 'CauseCandidate', 'Clause', 'ModelVerdict',
    'StabilityReport', 'Statistics', 'Verdict', 'Witness', 'WitnessCheck', 'WitnessSearch',
    'brute_force_is_actual_cause', 'brute_force_witnesses', 'but_for', 'check_ac1',
    'check_candidate', 'compare_verdicts', 'decide', 'directed_paths', 'enumerate_causes',
    'find_witness', 'is_actual_cause', 'iter_witnesses', 'path_topology', 'require_ac1',
    'verify_witness',
]
