"""Exact torus-weight computations for deformations of toric twistor spaces.

Weights are pairs ``(m, n)`` for the character ``(s, t) -> s**m * t**n``.
Subgroup directions are primitive pairs ``(p, q)`` and are normalized on input.
Configuration parameters may be ints, strings ``"p/q"`` or ``fractions.Fraction``.
"""

import json as _json
from fractions import Fraction as _Fraction

from . import _core
from ._core import (
    DegenerateConfiguration,
    closed_form_rep,
    excess_subgroups,
    fixed_dimension,
    isotropy_weight,
    moduli_dimension,
    normalize_direction,
    torus_invariant_dimension,
)

__all__ = [
    "DegenerateConfiguration",
    "alpha_rank",
    "assemble",
    "audit",
    "closed_form_rep",
    "cycle",
    "excess_subgroups",
    "fixed_dimension",
    "isotropy_weight",
    "moduli_dimension",
    "normalize_direction",
    "report",
    "torus_invariant_dimension",
    "validate_report",
    "verify",
]


def _params(a):
    if a is None:
        return None
    return [str(_Fraction(x)) for x in a]


def assemble(n, a=None):
    """Weights of H^1 per block, as {"rep1": {(m, n): mult}, ...}."""
    return _core.assemble(n, _params(a))


def alpha_rank(n, a=None):
    return _core.alpha_rank(n, _params(a))


def cycle(n, direction=None):
    return _json.loads(_core.cycle_json(n, direction))


def audit(n):
    return _json.loads(_core.audit_json(n))


def report(n, height=None):
    return _json.loads(_core.report_json(n, height))


def validate_report(doc):
    """Schema violations of a report document; empty when valid."""
    return _core.validate_report_schema(_json.dumps(doc))


def verify(n_from=3, n_to=12, seed=1, samples=5):
    return _json.loads(_core.verify_json(n_from, n_to, seed, samples))
