"""
Command-line front end
"""

import argparse
import logging
import sys
from typing import List, Optional

from .. import __version__
from ..config import get_settings
from ..errors import ConfigurationError
from ..normality import NormalitySemantics
from .executor import EXIT_ERROR, CommandExecutor
from .formatter import OutputFormatter


def _model_arguments(parser: argparse.ArgumentParser, with_context: bool = True) -> None:
    parser.add_argument('model', nargs='?', help="path to a .cm model file")
    parser.add_argument('--builtin', metavar='NAME', help="use a built-in fixture instead")
    if with_context:
        parser.add_argument('--context', action='append', metavar='KEY=VAL[,KEY=VAL...]',
                            help="exogenous values; repeatable, comma or space separated")


def _query_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--effect', required=True, help="effect formula, e.g. 'F=1'")
    parser.add_argument('--extended', action='store_true',
                        help="apply the normality condition of the model's ranking")
    parser.add_argument('--semantics', default=NormalitySemantics.LITERAL.value,
                        choices=[s.value for s in NormalitySemantics],
                        help="which worlds witness normality (default: literal)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help="emit one JSON document")
    common.add_argument('--verbose', action='store_true',
                        help="show Z, z* and search statistics")

    parser = argparse.ArgumentParser(
        prog='causet',
        description="Counterfactuals and actual causation over structural causal models",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--log-level', metavar='LEVEL',
                        help="logging level (default: CAUSET_LOG_LEVEL or WARNING)")
    commands = parser.add_subparsers(dest='command', required=True)

    validate = commands.add_parser('validate', parents=[common], help="check a model")
    _model_arguments(validate, with_context=False)

    evaluate = commands.add_parser('eval', parents=[common], help="evaluate a causal formula")
    _model_arguments(evaluate)
    evaluate.add_argument('--formula', required=True, help="e.g. '[ML<-0](F=1)'")

    cause = commands.add_parser('cause', parents=[common], help="is X=x an actual cause?")
    _model_arguments(cause)
    cause.add_argument('--cause', required=True, help="candidate, e.g. 'L=1' or 'L=1 & ML=1'")
    _query_arguments(cause)

    causes = commands.add_parser('causes', parents=[common], help="list actual causes")
    _model_arguments(causes)
    _query_arguments(causes)
    causes.add_argument('--max-conjuncts', type=int, default=1, metavar='N',
                        help="largest conjunction to consider (default: 1)")

    compare = commands.add_parser('compare', parents=[common],
                                  help="compare one query across several models")
    compare.add_argument('models', nargs='*', help="paths to .cm model files")
    compare.add_argument('--builtin', action='append', metavar='NAME',
                         help="add a built-in fixture; repeatable")
    compare.add_argument('--context', '--contexts', action='append', metavar='KEY=VAL,...',
                         help="one context per model, or one for all")
    compare.add_argument('--cause', required=True)
    compare.add_argument('--effect', required=True)

    fixtures = commands.add_parser('fixtures', help="built-in fixtures")
    actions = fixtures.add_subparsers(dest='action', required=True)
    actions.add_parser('list', parents=[common], help="list fixture names")
    extract = actions.add_parser('extract', parents=[common], help="print a fixture's source")
    extract.add_argument('name', help="fixture name, e.g. bodyguard or 'doctors(4)'")
    extract.add_argument('--output', '-o', metavar='PATH', help="write to a file instead")
    return parser


def _configure_logging(level: Optional[str]) -> None:
    level = (level or get_settings().log_level).upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigurationError(f"not a log level: {level!r}")
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _configure_logging(args.log_level)
    except ConfigurationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    json_output = getattr(args, 'json', False)
    formatter = OutputFormatter(color=sys.stdout.isatty() and not json_output,
                                verbose=getattr(args, 'verbose', False))
    result = CommandExecutor(formatter, json_output).execute(args)
    if result.stdout:
        print(result.stdout)
    if result.stderr:
        print(result.stderr, file=sys.stderr)
    return result.exit_code


if __name__ == '__main__':
    sys.exit(main())
