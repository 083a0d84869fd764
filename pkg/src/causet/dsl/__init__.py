"""
Text formats: model documents with optional rankings, causal formulas,
cause candidates and contexts
"""

from .document import ModelDocument
from .lexer import KEYWORDS, Token, TokenKind, tokenize
from .parser import (Parser, parse_boolean, parse_candidate, parse_context, parse_formula,
                     parse_model)
from .printer import (format_boolean, format_expression, format_formula, format_range,
                      print_model)

__all__ = [
    'KEYWORDS', 'ModelDocument', 'Parser', 'Token', 'TokenKind', 'format_boolean',
    'format_expression', 'format_formula', 'format_range', 'parse_boolean', 'parse_candidate',
    'parse_context', 'parse_formula', 'parse_model', 'print_model', 'tokenize',
]
