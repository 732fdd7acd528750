"""Graded Betti numbers, Koszul homology and syzygy audits over exact fields."""

import json

from ._core import (
    ParseError,
    audit_check_ids,
    binom_mod,
    exceptional_prime,
    is_good,
    template_text,
)
from . import _core

__all__ = [
    "ParseError",
    "audit",
    "audit_check_ids",
    "betti",
    "binom_mod",
    "exceptional_prime",
    "generate",
    "is_good",
    "template_text",
]


def generate(family, params=(), seed=1, characteristic=None):
    """Ideal document (dict) for a named family."""
    return json.loads(_core.generate(family, list(params), seed, characteristic))


def _text(ideal):
    return ideal if isinstance(ideal, str) else json.dumps(ideal)


def betti(ideal, i_max=None, row_cap=8):
    """Betti table of S/J as a dict; `ideal` is a document dict or JSON text."""
    return json.loads(_core.betti_json(_text(ideal), i_max, row_cap))


def audit(ideal, checks=(), i_max=None, heavy_max_vars=6):
    """Audit report as a dict."""
    return json.loads(_core.audit_json(_text(ideal), list(checks), i_max, heavy_max_vars))
