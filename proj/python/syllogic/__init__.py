"""Bounded model checking for categorical propositions."""

import json

from . import _core
from ._core import (
    BoundError,
    ModelFormatError,
    ParseError,
    ScriptError,
    SemanticsError,
    UltraElement,
    carrier,
    conventional_condition,
    fneg,
    inf,
    is_tautology,
    leq,
    neg,
    normalize,
    standard,
    sup,
    synthetic_condition,
    verify_two_squares,
)

__all__ = [
    "BoundError",
    "ModelFormatError",
    "ParseError",
    "ScriptError",
    "SemanticsError",
    "UltraElement",
    "carrier",
    "catalog",
    "check_proof",
    "classify",
    "classify_cases",
    "conventional_condition",
    "decide",
    "evaluate",
    "fneg",
    "inf",
    "is_tautology",
    "leq",
    "neg",
    "normalize",
    "square",
    "standard",
    "sup",
    "synthetic_condition",
    "verify_paper",
    "verify_two_squares",
]


def _model_text(model):
    return model if isinstance(model, str) else json.dumps(model)


def evaluate(formula, model, **semantics):
    """Truth of `formula` in a model given as a dict or JSON text."""
    return _core.evaluate(formula, _model_text(model), **semantics)


def decide(formula, bound=3, **semantics):
    return json.loads(_core.decide(formula, bound, **semantics))


def classify(phi, psi, metavariables=("S", "P"), bound=3, **semantics):
    return json.loads(_core.classify(phi, psi, list(metavariables), bound, **semantics))


def square(semantics="synthetic", bound=3, **options):
    return json.loads(_core.square(semantics, bound, **options))


def catalog(bound=3, allow_empty=False):
    return json.loads(_core.catalog(bound, allow_empty))


def check_proof(script, **axioms):
    return json.loads(_core.check_proof(script, **axioms))


def classify_cases(x):
    return json.loads(_core.classify_cases(x))


def verify_paper(model_bound=3, atom_count=2):
    return json.loads(_core.verify_paper(model_bound, atom_count))
