"""Output formatter for query results."""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..causality import CauseCandidate, StabilityReport, Verdict, Witness, WitnessCheck
from ..corpus import Fixture
from ..model import ValidationReport


@dataclass(frozen=True)
class QueryResult:
    """Machine-readable result of one command; keys keep insertion order."""

    command: str
    data: Dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, Any]:
        result = {'command': self.command}
        result.update(self.data)
        return result

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


def _assignment(pairs: Iterable[Tuple[str, int]]) -> str:
    text = ", ".join(f"{name}={value}" for name, value in pairs)
    return text or "-"


def _set(names: Sequence[str]) -> str:
    return "{" + ", ".join(names) + "}"


class OutputFormatter:
    """Format query results as text, with ANSI colours when enabled."""

    def __init__(self, color: bool = False, verbose: bool = False):
        self.color = color
        self.verbose = verbose
        # ANSI color codes
        self.colors = {
            'red': '\033[31m',
            'green': '\033[32m',
            'yellow': '\033[33m',
            'cyan': '\033[36m',
            'reset': '\033[0m'
        }

    def paint(self, text: str, color: str) -> str:
        if not self.color:
            return text
        return f"{self.colors[color]}{text}{self.colors['reset']}"

    def format_witness(self, witness: Witness, indent: str = "  ") -> List[str]:
        lines = [f"{indent}W = {_set(witness.w_set)}  w: {_assignment(witness.w_values)}"
                 f"  x': {_assignment(witness.x_prime)}"]
        if self.verbose:
            lines.append(f"{indent}Z = {_set(witness.z_set)}  z*: {_assignment(witness.z_star)}")
        return lines

    def format_rejected(self, check: WitnessCheck) -> List[str]:
        lines = ["  first rejected attempt:"]
        lines.extend(self.format_witness(check.witness, "    "))
        if check.normality is False:
            lines.append("    normality fails: the witness world is less normal than the actual one")
        elif check.counterexample is not None:
            w_subset, z_subset = check.counterexample
            lines.append(f"    AC2(b) fails at W' = {_set(w_subset)}, Z' = {_set(z_subset)}")
        return lines

    def format_verdict(self, candidate: CauseCandidate, effect: str, verdict: Verdict) -> str:
        if verdict.is_cause:
            lines = [self.paint(f"{candidate} is an actual cause of {effect}", 'green')]
            lines.extend(self.format_witness(verdict.witness))
        else:
            clause = verdict.failed_clause.value
            lines = [self.paint(f"{candidate} is not an actual cause of {effect} ({clause} fails)",
                                'red')]
            if verdict.ac3_blocker is not None:
                lines.append(f"  {verdict.ac3_blocker} already satisfies AC1 and AC2")
            if verdict.rejected is not None:
                lines.extend(self.format_rejected(verdict.rejected))
        if self.verbose:
            stats = verdict.statistics
            lines.append(f"  search: {stats.partitions} partitions, {stats.settings} settings, "
                         f"{stats.subset_checks} subset checks, "
                         f"{stats.normality_checks} normality checks")
        return "\n".join(lines)

    def format_causes(self, effect: str, causes: Sequence[Tuple[CauseCandidate, Witness]]) -> str:
        if not causes:
            return self.paint(f"no actual causes of {effect} found", 'red')
        rows = [("cause", "W", "w", "x'")]
        for candidate, witness in causes:
            rows.append((str(candidate), _set(witness.w_set), _assignment(witness.w_values),
                         _assignment(witness.x_prime)))
        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        lines = []
        for index, row in enumerate(rows):
            text = "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
            lines.append(self.paint(text, 'cyan') if index == 0 else text)
        return "\n".join(lines)

    def format_report(self, name: str, report: ValidationReport,
                      ranking_problems: Sequence = ()) -> str:
        problems = list(report) + list(ranking_problems)
        errors = [p for p in problems if p.is_error]
        if not errors:
            lines = [self.paint(f"{name}: valid", 'green')]
        else:
            lines = [self.paint(f"{name}: {len(errors)} error(s)", 'red')]
        for problem in problems:
            color = 'red' if problem.is_error else 'yellow'
            lines.append("  " + self.paint(str(problem), color))
        return "\n".join(lines)

    def format_stability(self, report: StabilityReport) -> str:
        width = max(len(row.model) for row in report.rows)
        lines = []
        for row in report.rows:
            if row.error is not None:
                outcome = self.paint(f"error: {row.error}", 'yellow')
            elif row.verdict.is_cause:
                outcome = self.paint("cause", 'green')
            else:
                outcome = self.paint(f"not a cause ({row.verdict.failed_clause.value})", 'red')
            lines.append(f"{row.model.ljust(width)}  {outcome}")
            if row.topology:
                for (cause, target), paths in row.topology.items():
                    shown = "; ".join(" -> ".join(p) for p in paths) or "no path"
                    lines.append(f"{''.ljust(width)}    {cause} to {target}: {shown}")
        for index, changed in enumerate(report.topology_changed):
            if changed:
                first, second = report.rows[index].model, report.rows[index + 1].model
                lines.append(f"paths change between {first} and {second}")
        verdict = "stable" if report.stable else "unstable"
        lines.append(self.paint(verdict, 'green' if report.stable else 'red'))
        return "\n".join(lines)

    def format_fixtures(self, fixtures: Sequence[Tuple[str, Optional[Fixture]]]) -> str:
        width = max(len(name) for name, _ in fixtures)
        lines = []
        for name, fixture in fixtures:
            note = fixture.description if fixture else "negative fixture (fails validation)"
            lines.append(f"{name.ljust(width)}  {note}")
        return "\n".join(lines)
