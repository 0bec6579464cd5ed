"""Exact Clifford algebra and even Clifford structure checks."""

import json

from . import _clifflab
from ._clifflab import (
    ParseError,
    __version__,
    geometric_product,
    max_supported_rank,
    n0,
    n_irr,
    suites,
)

__all__ = [
    "ParseError",
    "__version__",
    "classify",
    "curvature",
    "geometric_product",
    "max_supported_rank",
    "n0",
    "n_irr",
    "repgen",
    "run_suite",
    "suites",
    "table",
    "verify_all",
    "verify_structure",
]


def repgen(rank, kind="even", copies=1, minus=None):
    """Representation document as a dict; ``minus`` sets the second even multiplicity."""
    return json.loads(_clifflab.repgen(rank, kind, copies, -1 if minus is None else minus))


def verify_structure(document, suite, seed=0):
    if not isinstance(document, str):
        document = json.dumps(document)
    return json.loads(_clifflab.verify_structure(document, suite, seed))


def run_suite(suite_id, seed=0):
    return json.loads(_clifflab.run_suite(suite_id, seed))


def verify_all(seed=0):
    return json.loads(_clifflab.verify_all(seed))


def curvature(model, check):
    return json.loads(_clifflab.curvature(model, check))


def classify(candidate, **params):
    return json.loads(_clifflab.classify(candidate, params))


def table(number, format="markdown"):
    text = _clifflab.table(number, format)
    return json.loads(text) if format == "json" else text
