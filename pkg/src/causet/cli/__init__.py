"""
Command-line interface: argument interpretation, execution and output
"""

from .executor import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, CommandExecutor, CommandResult
from .formatter import OutputFormatter, QueryResult
from .interpreter import ArgumentInterpretationError, ArgumentInterpreter
from .main import build_parser, main

__all__ = [
    'ArgumentInterpretationError', 'ArgumentInterpreter', 'CommandExecutor', 'CommandResult',
    'EXIT_ERROR', 'EXIT_NEGATIVE', 'EXIT_OK', 'OutputFormatter', 'QueryResult', 'build_parser',
    'main',
]
