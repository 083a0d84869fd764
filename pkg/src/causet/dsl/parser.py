"""
Recursive-descent parser for model documents, causal formulas, cause
candidates and contexts. Expressions use precedence climbing.
"""

import logging
from contextlib import contextmanager
from typing import Dict, Iterable, List, Optional, Tuple

from ..causality import CauseCandidate
from ..errors import DslSyntaxError, DuplicateIdentifierError, ParseError, SemanticError
from ..expr import BinOp, Const, Expression, If, Not, Var
from ..expr.nodes import INFIX_PRECEDENCE
from ..model import (CausalModel, Context, Mechanism, Range, Signature, Variable, check_context,
                     validate_model)
from ..normality import INFINITY, RankingFunction, RankingRule
from ..semantics import And, BooleanFormula, CausalFormula, Negation, Or, PrimitiveEvent, Truth
from .document import ModelDocument
from .lexer import Token, TokenKind, tokenize

logger = logging.getLogger(__name__)

# Bounds recursion on adversarial input well below the interpreter limit.
MAX_NESTING = 64
# Operator chains count too: the evaluator and printer recurse once per level.
MAX_DEPTH = 200
MAX_RANGE = 1 << 16


class Parser:
    """One parser per input text; instances are not shared between threads."""

    def __init__(self, text: str, source: Optional[str] = None):
        self.text = text
        self.source = source
        self.tokens = tokenize(text, source)
        self.position = 0
        self.depth = 0

    # Token plumbing

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def _advance(self) -> Token:
        token = self.current
        if token.kind is not TokenKind.EOF:
            self.position += 1
        return token

    def _check(self, kind: TokenKind, text: str = None) -> bool:
        token = self.current
        return token.kind is kind and (text is None or token.text == text)

    def _accept(self, kind: TokenKind, text: str = None) -> Optional[Token]:
        return self._advance() if self._check(kind, text) else None

    def _expect(self, kind: TokenKind, text: str = None, what: str = None) -> Token:
        if self._check(kind, text):
            return self._advance()
        wanted = what or (f"'{text}'" if text else kind.value)
        raise self.error(f"expected {wanted}, found {self.current.describe()}")

    def error(self, message: str, token: Token = None, cls=DslSyntaxError) -> ParseError:
        token = token or self.current
        return cls(message, token.line, token.column, self.source)

    def expect_end(self) -> None:
        self._expect(TokenKind.EOF, what='end of input')

    @contextmanager
    def _nested(self, token: Token):
        self.depth += 1
        if self.depth > MAX_NESTING:
            raise self.error("nesting too deep", token)
        try:
            yield
        finally:
            self.depth -= 1

    # Literals

    def signed_int(self) -> Tuple[int, Token]:
        minus = self._accept(TokenKind.SYMBOL, '-')
        token = self._expect(TokenKind.INT, what='integer')
        value = int(token.text)
        return (-value if minus else value), (minus or token)

    def rank(self):
        if self._accept(TokenKind.KEYWORD, 'inf'):
            return INFINITY
        return int(self._expect(TokenKind.INT, what="rank (integer or 'inf')").text)

    def _event_operator(self) -> Optional[str]:
        for symbol in ('=', '=='):
            if self._accept(TokenKind.SYMBOL, symbol):
                return '='
        if self._accept(TokenKind.SYMBOL, '!='):
            return '!='
        return None

    # Expressions. The private helpers return (tree, depth) so that long
    # operator chains are bounded as well as parentheses.

    def _binary_operator(self) -> Optional[str]:
        token = self.current
        if token.kind is not TokenKind.SYMBOL:
            return None
        if token.text == '==':
            return '='
        return token.text if token.text in INFIX_PRECEDENCE else None

    def _deeper(self, depth: int, token: Token) -> int:
        if depth > MAX_DEPTH:
            raise self.error("expression too deep", token)
        return depth

    def expression(self, references: List[Token]) -> Expression:
        return self._expression(references)[0]

    def _expression(self, references: List[Token],
                    min_precedence: int = 1) -> Tuple[Expression, int]:
        left, depth = self._unary(references)
        while True:
            op = self._binary_operator()
            if op is None or INFIX_PRECEDENCE[op] < min_precedence:
                return left, depth
            token = self._advance()
            right, right_depth = self._expression(references, INFIX_PRECEDENCE[op] + 1)
            left = BinOp(op, left, right)
            depth = self._deeper(max(depth, right_depth) + 1, token)

    def _unary(self, references: List[Token]) -> Tuple[Expression, int]:
        token = self.current
        if self._accept(TokenKind.SYMBOL, '!'):
            with self._nested(token):
                operand, depth = self._unary(references)
            return Not(operand), self._deeper(depth + 1, token)
        if self._accept(TokenKind.SYMBOL, '-'):
            with self._nested(token):
                operand, depth = self._unary(references)
            if isinstance(operand, Const):
                return Const(-operand.value), depth
            return BinOp('-', Const(0), operand), self._deeper(depth + 1, token)
        return self._primary(references)

    def _arguments(self, references: List[Token], token: Token) -> List[Tuple[Expression, int]]:
        self._expect(TokenKind.SYMBOL, '(')
        with self._nested(token):
            arguments = [self._expression(references)]
            while self._accept(TokenKind.SYMBOL, ','):
                arguments.append(self._expression(references))
        self._expect(TokenKind.SYMBOL, ')', what="',' or ')'")
        return arguments

    def _primary(self, references: List[Token]) -> Tuple[Expression, int]:
        token = self.current
        if token.kind is TokenKind.INT:
            self._advance()
            return Const(int(token.text)), 1
        if token.kind is TokenKind.IDENT:
            self._advance()
            references.append(token)
            return Var(token.text), 1
        if token.kind is TokenKind.KEYWORD and token.text in ('max', 'min'):
            self._advance()
            arguments = self._arguments(references, token)
            if len(arguments) < 2:
                raise self.error(f"{token.text} needs at least two arguments", token)
            result, depth = arguments[0]
            for argument, argument_depth in arguments[1:]:
                result = BinOp(token.text, result, argument)
                depth = self._deeper(max(depth, argument_depth) + 1, token)
            return result, depth
        if token.kind is TokenKind.KEYWORD and token.text == 'if':
            self._advance()
            arguments = self._arguments(references, token)
            if len(arguments) != 3:
                raise self.error("if needs exactly three arguments: if(condition, then, else)",
                                 token)
            depth = self._deeper(max(d for _, d in arguments) + 1, token)
            return If(*(a for a, _ in arguments)), depth
        if self._accept(TokenKind.SYMBOL, '('):
            with self._nested(token):
                inner = self._expression(references)
            self._expect(TokenKind.SYMBOL, ')')
            return inner
        raise self.error(f"expected an expression, found {token.describe()}")

    # Boolean formulas

    def boolean(self, signature: Optional[Signature], allow_exogenous: bool) -> BooleanFormula:
        return self._disjunction(signature, allow_exogenous)[0]

    def _disjunction(self, signature, allow_exogenous) -> Tuple[BooleanFormula, int]:
        left, depth = self._conjunction(signature, allow_exogenous)
        while True:
            token = self._accept(TokenKind.SYMBOL, '|')
            if token is None:
                return left, depth
            right, right_depth = self._conjunction(signature, allow_exogenous)
            left = Or(left, right)
            depth = self._deeper(max(depth, right_depth) + 1, token)

    def _conjunction(self, signature, allow_exogenous) -> Tuple[BooleanFormula, int]:
        left, depth = self._negation(signature, allow_exogenous)
        while True:
            token = self._accept(TokenKind.SYMBOL, '&')
            if token is None:
                return left, depth
            right, right_depth = self._negation(signature, allow_exogenous)
            left = And(left, right)
            depth = self._deeper(max(depth, right_depth) + 1, token)

    def _negation(self, signature, allow_exogenous) -> Tuple[BooleanFormula, int]:
        token = self.current
        if self._accept(TokenKind.SYMBOL, '!'):
            with self._nested(token):
                inner, depth = self._negation(signature, allow_exogenous)
            return Negation(inner), self._deeper(depth + 1, token)
        if self._accept(TokenKind.SYMBOL, '('):
            with self._nested(token):
                inner = self._disjunction(signature, allow_exogenous)
            self._expect(TokenKind.SYMBOL, ')')
            return inner
        if self._accept(TokenKind.KEYWORD, 'true'):
            return Truth(True), 1
        if self._accept(TokenKind.KEYWORD, 'false'):
            return Truth(False), 1
        name = self._expect(TokenKind.IDENT, what='a primitive event like X=1')
        op = self._event_operator()
        if op is None:
            raise self.error(f"expected '=' after {name.text}, found {self.current.describe()}")
        value, value_token = self.signed_int()
        self.resolve(signature, name, value, value_token, allow_exogenous)
        event = PrimitiveEvent(name.text, value)
        return (Negation(event), 2) if op == '!=' else (event, 1)

    def resolve(self, signature: Optional[Signature], name: Token, value: int,
                value_token: Token, allow_exogenous: bool) -> None:
        if signature is None:
            return
        if name.text not in signature:
            raise self.error(f"unknown variable '{name.text}'", name, SemanticError)
        if not allow_exogenous and not signature.is_endogenous(name.text):
            raise self.error(f"'{name.text}' is exogenous", name, SemanticError)
        if value not in signature.range_of(name.text):
            raise self.error(f"value {value} is out of range for '{name.text}'", value_token,
                             SemanticError)

    def causal_formula(self, signature: Optional[Signature]) -> CausalFormula:
        interventions: List[Tuple[str, int]] = []
        if self._accept(TokenKind.SYMBOL, '['):
            seen = set()
            while True:
                name = self._expect(TokenKind.IDENT, what='a variable to intervene on')
                self._expect(TokenKind.SYMBOL, '<-')
                value, value_token = self.signed_int()
                if name.text in seen:
                    raise self.error(f"duplicate intervention variable '{name.text}'", name,
                                     SemanticError)
                self.resolve(signature, name, value, value_token, False)
                seen.add(name.text)
                interventions.append((name.text, value))
                if not self._accept(TokenKind.SYMBOL, ','):
                    break
            self._expect(TokenKind.SYMBOL, ']', what="',' or ']'")
        return CausalFormula(tuple(interventions), self.boolean(signature, False))

    # Model documents

    def _range(self) -> Range:
        self._expect(TokenKind.SYMBOL, '{')
        low, _ = self.signed_int()
        if self._accept(TokenKind.SYMBOL, '..'):
            high, high_token = self.signed_int()
            self._expect(TokenKind.SYMBOL, '}')
            if high < low:
                raise self.error(f"empty range {{{low}..{high}}}", high_token, SemanticError)
            if high - low >= MAX_RANGE:
                raise self.error(f"range {{{low}..{high}}} is too large", high_token, SemanticError)
            return Range.interval(low, high)
        values = [low]
        while self._accept(TokenKind.SYMBOL, ','):
            value, value_token = self.signed_int()
            if value in values:
                raise self.error(f"value {value} listed twice", value_token, SemanticError)
            values.append(value)
        self._expect(TokenKind.SYMBOL, '}', what="',', '..' or '}'")
        return Range.of(values)

    def _declarations(self, keyword: str, seen: Dict[str, Token]) -> List[Variable]:
        self._expect(TokenKind.KEYWORD, keyword)
        self._expect(TokenKind.SYMBOL, '{')
        variables = []
        while not self._accept(TokenKind.SYMBOL, '}'):
            name = self._expect(TokenKind.IDENT, what="a variable declaration or '}'")
            if name.text in seen:
                first = seen[name.text]
                raise self.error(f"'{name.text}' already declared at {first.line}:{first.column}",
                                 name, DuplicateIdentifierError)
            seen[name.text] = name
            self._expect(TokenKind.SYMBOL, ':')
            variables.append(Variable(name.text, self._range()))
        return variables

    def _equations(self, signature: Signature) -> Tuple[List[Mechanism], Dict[str, Token]]:
        self._expect(TokenKind.KEYWORD, 'equations')
        self._expect(TokenKind.SYMBOL, '{')
        mechanisms, targets = [], {}
        while not self._accept(TokenKind.SYMBOL, '}'):
            target = self._expect(TokenKind.IDENT, what="an equation or '}'")
            if target.text not in signature:
                raise self.error(f"equation for undeclared variable '{target.text}'", target,
                                 SemanticError)
            if signature.is_exogenous(target.text):
                raise self.error(f"equation for exogenous variable '{target.text}'", target,
                                 SemanticError)
            if target.text in targets:
                raise self.error(f"second equation for '{target.text}'", target,
                                 DuplicateIdentifierError)
            targets[target.text] = target
            self._expect(TokenKind.SYMBOL, '=')
            references: List[Token] = []
            body = self.expression(references)
            for reference in references:
                if reference.text not in signature:
                    raise self.error(f"unknown variable '{reference.text}'", reference,
                                     SemanticError)
            mechanisms.append(Mechanism(target.text, body))
        return mechanisms, targets

    def _ranking(self, signature: Signature) -> RankingFunction:
        self._expect(TokenKind.KEYWORD, 'ranking')
        self._expect(TokenKind.SYMBOL, '{')
        rules = []
        while self._accept(TokenKind.KEYWORD, 'rule'):
            pattern: List[Tuple[str, int]] = []
            if not self._check(TokenKind.SYMBOL, '=>'):
                while True:
                    name = self._expect(TokenKind.IDENT, what='a pattern like X=1')
                    if self._event_operator() != '=':
                        raise self.error(f"expected '=' after {name.text}")
                    value, value_token = self.signed_int()
                    if any(name.text == seen for seen, _ in pattern):
                        raise self.error(f"'{name.text}' appears twice in the pattern", name,
                                         SemanticError)
                    self.resolve(signature, name, value, value_token, True)
                    pattern.append((name.text, value))
                    if not self._accept(TokenKind.SYMBOL, ','):
                        break
            self._expect(TokenKind.SYMBOL, '=>')
            rules.append(RankingRule(tuple(pattern), self.rank()))
        self._expect(TokenKind.KEYWORD, 'default', what="'rule' or 'default'")
        self._expect(TokenKind.SYMBOL, '=>')
        default = self.rank()
        self._expect(TokenKind.SYMBOL, '}')
        return RankingFunction(tuple(rules), default)

    def model_document(self, validate: bool = True) -> ModelDocument:
        self._expect(TokenKind.KEYWORD, 'model')
        name = self._expect(TokenKind.IDENT, what='a model name')
        self._expect(TokenKind.SYMBOL, '{')
        declared: Dict[str, Token] = {}
        exogenous = self._declarations('exogenous', declared)
        endogenous = self._declarations('endogenous', declared)
        signature = Signature(tuple(exogenous), tuple(endogenous))
        mechanisms, targets = self._equations(signature)
        ranking = None
        if self._check(TokenKind.KEYWORD, 'ranking'):
            ranking = self._ranking(signature)
        self._expect(TokenKind.SYMBOL, '}')
        self.expect_end()

        document = ModelDocument(
            CausalModel(signature, tuple(mechanisms), name.text),
            ranking,
            self.text,
            {n: (t.line, t.column) for n, t in declared.items()},
            {n: (t.line, t.column) for n, t in targets.items()},
        )
        if validate:
            self._check_valid(document)
        logger.debug("parsed model %s: %d exogenous, %d endogenous", name.text,
                     len(exogenous), len(endogenous))
        return document

    def _check_valid(self, document: ModelDocument) -> None:
        report = validate_model(document.model)
        if report.is_valid:
            return
        violation = report.errors[0]
        line, column = document.location_of(violation.variable) if violation.variable else (1, 1)
        raise SemanticError(str(violation), line, column, self.source)


def parse_model(text: str, validate: bool = True, source: Optional[str] = None) -> ModelDocument:
    """
    Parse a model document. With validate, the model must also pass
    validate_model; the first violation is raised as a located
    SemanticError. Unknown and duplicate names are rejected either way.
    """
    return Parser(text, source).model_document(validate)


def parse_formula(text: str, signature: Signature) -> CausalFormula:
    parser = Parser(text)
    formula = parser.causal_formula(signature)
    parser.expect_end()
    return formula


def parse_boolean(text: str, signature: Optional[Signature],
                  allow_exogenous: bool = False) -> BooleanFormula:
    parser = Parser(text)
    formula = parser.boolean(signature, allow_exogenous)
    parser.expect_end()
    return formula


def parse_candidate(text: str, signature: Optional[Signature]) -> CauseCandidate:
    """A conjunction of endogenous events, joined with '&' or ','."""
    parser = Parser(text)
    conjuncts, seen = [], set()
    while True:
        name = parser._expect(TokenKind.IDENT, what='an event like X=1')
        parser._expect(TokenKind.SYMBOL, '=')
        value, value_token = parser.signed_int()
        if name.text in seen:
            raise parser.error(f"'{name.text}' appears twice", name, SemanticError)
        parser.resolve(signature, name, value, value_token, False)
        seen.add(name.text)
        conjuncts.append((name.text, value))
        if not (parser._accept(TokenKind.SYMBOL, '&') or parser._accept(TokenKind.SYMBOL, ',')):
            break
    parser.expect_end()
    return CauseCandidate(tuple(conjuncts))


def parse_context(pairs: Iterable[str], signature: Optional[Signature]) -> Context:
    """
    KEY=VAL items, each possibly holding several pairs separated by commas
    or whitespace. With a signature the result is checked to be a total
    context; without one it is returned as written.
    """
    assignment: Dict[str, int] = {}
    for item in pairs:
        parser = Parser(item)
        while not parser._check(TokenKind.EOF):
            name = parser._expect(TokenKind.IDENT, what='KEY=VAL')
            parser._expect(TokenKind.SYMBOL, '=')
            value, _ = parser.signed_int()
            if name.text in assignment:
                raise parser.error(f"'{name.text}' assigned twice", name, SemanticError)
            assignment[name.text] = value
            parser._accept(TokenKind.SYMBOL, ',')
    if signature is None:
        return assignment
    return check_context(signature, assignment)
