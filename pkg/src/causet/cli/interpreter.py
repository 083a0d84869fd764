"""
Turns command-line arguments into model documents, contexts, candidates
and effects
"""

import logging
from typing import List, Optional, Tuple

from ..causality import CauseCandidate
from ..corpus import NEGATIVE_FIXTURES, Fixture, fixture_source, load_fixture
from ..dsl import ModelDocument, parse_boolean, parse_candidate, parse_context, parse_model
from ..errors import CausetError, ContextError
from ..model import Context
from ..normality import NormalitySemantics
from ..semantics import BooleanFormula

logger = logging.getLogger(__name__)


class ArgumentInterpretationError(CausetError):
    """Raised when the arguments do not describe a query"""
    pass


class ArgumentInterpreter:
    @staticmethod
    def read_source(path: str) -> str:
        try:
            with open(path, encoding='utf-8') as handle:
                return handle.read()
        except UnicodeDecodeError as e:
            raise ArgumentInterpretationError(f"{path}: not UTF-8 text ({e.reason})")

    @staticmethod
    def document(path: Optional[str], builtin: Optional[str],
                 validate: bool = True) -> ModelDocument:
        """Parse the model named by a file path or a built-in fixture name."""
        if (path is None) == (builtin is None):
            raise ArgumentInterpretationError("give exactly one of a model file or --builtin")
        if builtin is not None:
            return parse_model(fixture_source(builtin), validate, source=f"<{builtin}>")
        return parse_model(ArgumentInterpreter.read_source(path), validate, source=path)

    @staticmethod
    def fixture(builtin: Optional[str]) -> Optional[Fixture]:
        if builtin is None or builtin.strip() in NEGATIVE_FIXTURES:
            return None
        return load_fixture(builtin)

    @staticmethod
    def context(pairs: Optional[List[str]], document: ModelDocument,
                builtin: Optional[str] = None) -> Context:
        """
        The --context pairs checked against the model; a built-in fixture
        falls back to its first canonical context.
        """
        if pairs:
            return parse_context(pairs, document.model.signature)
        fixture = ArgumentInterpreter.fixture(builtin)
        if fixture is not None:
            logger.info("using context %r of %s", fixture.contexts[0][0], fixture.name)
            return fixture.default_context
        missing = document.model.signature.exogenous_names
        if not missing:
            return {}
        raise ContextError(f"context is missing exogenous variables: {', '.join(missing)}",
                           missing=missing)

    @staticmethod
    def candidate(text: str, document: Optional[ModelDocument]) -> CauseCandidate:
        return parse_candidate(text, document.model.signature if document else None)

    @staticmethod
    def effect(text: str, document: Optional[ModelDocument]) -> BooleanFormula:
        return parse_boolean(text, document.model.signature if document else None)

    @staticmethod
    def semantics(name: str) -> NormalitySemantics:
        return NormalitySemantics(name)

    @staticmethod
    def comparison_inputs(paths: List[str], builtins: List[str],
                          contexts: List[str]) -> Tuple[List[ModelDocument], List[Context]]:
        """
        Documents for every model of a comparison, in the order given (files
        first, then built-ins), each with its context: one --context per
        model, or one shared by all, or the fixture default. Context
        problems are left for the per-model rows to report.
        """
        documents = [ArgumentInterpreter.document(p, None) for p in paths]
        documents += [ArgumentInterpreter.document(None, b) for b in builtins]
        if len(documents) < 2:
            raise ArgumentInterpretationError("compare needs at least two models")
        sources = [None] * len(paths) + list(builtins)
        if contexts and len(contexts) not in (1, len(documents)):
            raise ArgumentInterpretationError(
                f"got {len(contexts)} contexts for {len(documents)} models"
            )
        resolved = []
        for index, (document, builtin) in enumerate(zip(documents, sources)):
            if contexts:
                pairs = contexts[0] if len(contexts) == 1 else contexts[index]
                resolved.append(parse_context([pairs], None))
            else:
                fixture = ArgumentInterpreter.fixture(builtin)
                resolved.append(fixture.default_context if fixture else {})
        return documents, resolved
