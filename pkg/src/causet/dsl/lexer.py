"""
Tokenizer for the model-description language
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from ..errors import LexicalError

KEYWORDS = frozenset((
    'model', 'exogenous', 'endogenous', 'equations', 'ranking', 'rule', 'default',
    'inf', 'max', 'min', 'if', 'true', 'false',
))

# Longest first, so that '<-' wins over '<' and '..' is never split.
SYMBOLS = (
    '<-', '=>', '..', '==', '!=', '<=', '>=',
    '{', '}', '(', ')', '[', ']', ':', ',', '=', '<', '>', '+', '-', '*', '&', '|', '!',
)

# ASCII only: str.isalpha and str.isdigit accept far more than the grammar does.
_IDENT_START = frozenset('abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_')
_DIGITS = frozenset('0123456789')
_IDENT_CHARS = _IDENT_START | _DIGITS
_BLANKS = frozenset(' \t\r\f')

# Far below the interpreter's string-to-int conversion limit.
MAX_INT_DIGITS = 64


class TokenKind(Enum):
    IDENT = 'identifier'
    INT = 'integer'
    KEYWORD = 'keyword'
    SYMBOL = 'symbol'
    EOF = 'end of input'


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int

    def describe(self) -> str:
        if self.kind is TokenKind.EOF:
            return 'end of input'
        return f"{self.kind.value} '{self.text}'"


def tokenize(text: str, source: Optional[str] = None) -> List[Token]:
    """
    Split text into tokens with 1-based line and column numbers. Accepts
    both \\n and \\r\\n line endings; '#' comments run to the end of the line.
    The list always ends with an EOF token.
    """
    tokens = []
    i, line, column = 0, 1, 1
    n = len(text)
    while i < n:
        char = text[i]
        if char == '\n':
            i += 1
            line += 1
            column = 1
            continue
        if char in _BLANKS:
            i += 1
            column += 1
            continue
        if char == '#':
            end = text.find('\n', i)
            end = n if end < 0 else end
            column += end - i
            i = end
            continue

        if char in _IDENT_START:
            j = i + 1
            while j < n and text[j] in _IDENT_CHARS:
                j += 1
            word = text[i:j]
            kind = TokenKind.KEYWORD if word in KEYWORDS else TokenKind.IDENT
        elif char in _DIGITS:
            j = i + 1
            while j < n and text[j] in _DIGITS:
                j += 1
            if j < n and text[j] in _IDENT_START:
                raise LexicalError(f"malformed number '{text[i:j + 1]}'", line, column, source)
            if j - i > MAX_INT_DIGITS:
                raise LexicalError(f"integer literal too long ({j - i} digits)", line, column,
                                   source)
            word, kind = text[i:j], TokenKind.INT
        else:
            word = next((s for s in SYMBOLS if text.startswith(s, i)), None)
            if word is None:
                raise LexicalError(f"unexpected character {char!r}", line, column, source)
            j, kind = i + len(word), TokenKind.SYMBOL

        tokens.append(Token(kind, word, line, column))
        column += j - i
        i = j
    tokens.append(Token(TokenKind.EOF, '', line, column))
    return tokens
