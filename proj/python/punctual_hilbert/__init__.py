"""Exact constructions and checks for the punctual Hilbert functor of the line.

The command-style functions return the same report documents as the ``hilb``
command line tool (``--json``), decoded into dictionaries.
"""

import json

from . import _core
from ._core import (
    BudgetExceeded,
    HilbError,
    ParseError,
    PreconditionViolation,
    RingMismatch,
    Unsupported,
    VerificationFailure,
    format_poly,
    nilpotency_index,
    normal_form,
    to_elementary_basis,
)

__all__ = [
    "BudgetExceeded",
    "HilbError",
    "ParseError",
    "PreconditionViolation",
    "RingMismatch",
    "Unsupported",
    "VerificationFailure",
    "check",
    "cofactor",
    "enumerate_points",
    "format_poly",
    "hnm",
    "minexp",
    "nilpotency_index",
    "normal_form",
    "to_elementary_basis",
    "witness",
]


def hnm(n, m, field="Q", budget=1_000_000):
    """Presentation of H_{n,m}: generators, staircase, dimension, F and Y."""
    return json.loads(_core.hnm(n, m, field=field, budget=budget))


def minexp(n, m, field="Q"):
    return json.loads(_core.minexp(n, m, field=field))


def cofactor(coeffs, ideal=(), vars=(), field="Q"):
    """G with F*G = x^E for F = x^n - u_1 x^{n-1} + ... over k[vars]/(ideal)."""
    return json.loads(_core.cofactor(list(coeffs), list(ideal), list(vars), field=field))


def witness(n, N):
    return json.loads(_core.witness(n, N))


def check(suite="all", seed=0, field="Q"):
    return json.loads(_core.check(suite, seed=seed, field=field))


def enumerate_points(n, ideal=("u^2",), vars=(), field="F2"):
    return json.loads(_core.enumerate(n, list(ideal), list(vars), field=field))
