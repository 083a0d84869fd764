"""
Command execution: runs one parsed command line and collects its output
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict

from ..causality import compare_verdicts, enumerate_causes, is_actual_cause
from ..corpus import NEGATIVE_FIXTURES, fixture_names, fixture_source, load_fixture
from ..dsl import format_boolean, parse_formula
from ..errors import CausetError
from ..model import validate_model
from ..normality import enumerate_causes_extended, is_actual_cause_extended, validate_ranking
from ..semantics import satisfies
from .formatter import OutputFormatter, QueryResult
from .interpreter import ArgumentInterpreter

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str = ''
    stderr: str = ''


class CommandExecutor:
    def __init__(self, formatter: OutputFormatter = None, json_output: bool = False):
        self.formatter = formatter or OutputFormatter()
        self.json_output = json_output
        self.handlers: Dict[str, Callable] = {
            'validate': self.validate,
            'eval': self.evaluate,
            'cause': self.cause,
            'causes': self.causes,
            'compare': self.compare,
            'fixtures': self.fixtures,
        }

    def execute(self, args) -> CommandResult:
        """
        Run a command and map the outcome to an exit status: 0 for success
        or an affirmative answer, 1 for a negative answer, 2 for any error.
        """
        try:
            return self.handlers[args.command](args)
        except (CausetError, OSError) as e:
            logger.debug("%s failed", args.command, exc_info=True)
            return CommandResult(EXIT_ERROR, stderr=f"error: {e}")

    def _emit(self, exit_code: int, result: QueryResult, text: str) -> CommandResult:
        return CommandResult(exit_code, result.to_json() if self.json_output else text)

    def validate(self, args) -> CommandResult:
        document = ArgumentInterpreter.document(args.model, args.builtin, validate=False)
        report = validate_model(document.model)
        ranking_problems = []
        if document.ranking is not None:
            ranking_problems = validate_ranking(document.model.signature, document.ranking)
        problems = list(report) + ranking_problems
        valid = not any(p.is_error for p in problems)
        result = QueryResult('validate', {
            'model': document.name,
            'valid': valid,
            'violations': [
                {
                    'kind': p.kind.value,
                    'variable': p.variable,
                    'message': p.message,
                    'error': p.is_error,
                    'cycle': list(p.cycle) if p.cycle else None,
                }
                for p in problems
            ],
        })
        text = self.formatter.format_report(document.name, report, ranking_problems)
        return self._emit(EXIT_OK if valid else EXIT_NEGATIVE, result, text)

    def evaluate(self, args) -> CommandResult:
        document = ArgumentInterpreter.document(args.model, args.builtin)
        context = ArgumentInterpreter.context(args.context, document, args.builtin)
        formula = parse_formula(args.formula, document.model.signature)
        value = satisfies(document.model, context, formula)
        result = QueryResult('eval', {
            'model': document.name,
            'context': context,
            'formula': args.formula,
            'value': value,
        })
        return self._emit(EXIT_OK, result, 'true' if value else 'false')

    def cause(self, args) -> CommandResult:
        document = ArgumentInterpreter.document(args.model, args.builtin)
        context = ArgumentInterpreter.context(args.context, document, args.builtin)
        candidate = ArgumentInterpreter.candidate(args.cause, document)
        effect = ArgumentInterpreter.effect(args.effect, document)
        semantics = ArgumentInterpreter.semantics(args.semantics)
        if args.extended:
            verdict = is_actual_cause_extended(document.extended, context, candidate, effect,
                                               semantics)
        else:
            verdict = is_actual_cause(document.model, context, candidate, effect)
        result = QueryResult('cause', {
            'model': document.name,
            'context': context,
            'cause': candidate.as_dict(),
            'effect': format_boolean(effect),
            'extended': args.extended,
            'semantics': semantics.value if args.extended else None,
            'verdict': verdict.as_dict(),
        })
        text = self.formatter.format_verdict(candidate, format_boolean(effect), verdict)
        return self._emit(EXIT_OK if verdict.is_cause else EXIT_NEGATIVE, result, text)

    def causes(self, args) -> CommandResult:
        document = ArgumentInterpreter.document(args.model, args.builtin)
        context = ArgumentInterpreter.context(args.context, document, args.builtin)
        effect = ArgumentInterpreter.effect(args.effect, document)
        semantics = ArgumentInterpreter.semantics(args.semantics)
        if args.extended:
            found = enumerate_causes_extended(document.extended, context, effect,
                                              args.max_conjuncts, semantics)
        else:
            found = enumerate_causes(document.model, context, effect, args.max_conjuncts)
        result = QueryResult('causes', {
            'model': document.name,
            'context': context,
            'effect': format_boolean(effect),
            'extended': args.extended,
            'semantics': semantics.value if args.extended else None,
            'causes': [
                {'cause': candidate.as_dict(), 'witness': witness.as_dict()}
                for candidate, witness in found
            ],
        })
        text = self.formatter.format_causes(format_boolean(effect), found)
        return self._emit(EXIT_OK if found else EXIT_NEGATIVE, result, text)

    def compare(self, args) -> CommandResult:
        documents, contexts = ArgumentInterpreter.comparison_inputs(
            args.models, args.builtin or [], args.context or []
        )
        candidate = ArgumentInterpreter.candidate(args.cause, None)
        effect = ArgumentInterpreter.effect(args.effect, None)
        report = compare_verdicts([d.model for d in documents], contexts, candidate, effect)
        result = QueryResult('compare', {
            'cause': candidate.as_dict(),
            'effect': format_boolean(effect),
            **report.as_dict(),
        })
        text = self.formatter.format_stability(report)
        return self._emit(EXIT_OK if report.stable else EXIT_NEGATIVE, result, text)

    def fixtures(self, args) -> CommandResult:
        if args.action == 'extract':
            source = fixture_source(args.name)
            if args.output:
                with open(args.output, 'w', encoding='utf-8') as handle:
                    handle.write(source)
                return CommandResult(EXIT_OK, f"wrote {args.output}")
            return CommandResult(EXIT_OK, source.rstrip('\n'))

        listed = [(name, load_fixture(name)) for name in fixture_names()]
        listed += [(name, None) for name in NEGATIVE_FIXTURES]
        result = QueryResult('fixtures', {
            'fixtures': [
                {
                    'name': name,
                    'loadable': fixture is not None,
                    'description': fixture.description if fixture else None,
                }
                for name, fixture in listed
            ],
        })
        return self._emit(EXIT_OK, result, self.formatter.format_fixtures(listed))
