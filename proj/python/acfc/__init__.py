"""Finite-truncation models of BV and AC functional calculi.

The heavy lifting lives in the compiled ``_core`` extension; report-producing
functions are wrapped here so they return dictionaries instead of JSON text.
"""

import json

from . import _core
from ._core import (
    InvalidArgument,
    SetMismatch,
    UnsupportedRule,
    bv_norm,
    diagonal_calculus,
    ell1_iso,
    is_continuous_at_markers,
    matrix_norm,
    multiplication_operator,
    phi1,
    phi2,
    random_idempotent,
    restrict,
    set_points,
    standard_catalog,
    sup_norm,
    u_iso_c0,
    variation,
)

__all__ = [
    "InvalidArgument",
    "SetMismatch",
    "UnsupportedRule",
    "banach_limit_demo",
    "bv_norm",
    "c0_obstruction",
    "diagonal_calculus",
    "duality_identity",
    "ell1_iso",
    "ell1_iso_demo",
    "homomorphism_check",
    "is_continuous_at_markers",
    "matrix_norm",
    "multiplication_operator",
    "phi1",
    "phi2",
    "random_idempotent",
    "restrict",
    "riesz_thorin",
    "run_cli",
    "set_json",
    "set_points",
    "standard_catalog",
    "sup_norm",
    "u_iso_c0",
    "variation",
]


def set_json(descriptor):
    return json.loads(_core.set_json(descriptor))


def homomorphism_check(set_descriptor, tol=1e-10):
    return json.loads(_core.homomorphism_check(set_descriptor, tol))


def c0_obstruction(n, eps=0.0, window=1):
    return json.loads(_core.c0_obstruction(n, eps, window))


def ell1_iso_demo(n, trials=100, seed=1):
    return json.loads(_core.ell1_iso_demo(n, trials, seed))


def banach_limit_demo(m):
    return json.loads(_core.banach_limit_demo(m))


def riesz_thorin(a, p0, p1, theta, tol=1e-9):
    return json.loads(_core.riesz_thorin(a, p0, p1, theta, tol))


def duality_identity(a, trials=100, seed=0, tol=1e-12):
    return json.loads(_core.duality_identity(a, trials, seed, tol))


def run_cli(args):
    """Run the command line front end in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
