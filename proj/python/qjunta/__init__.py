"""Junta testing under arbitrary distributions.

The compiled core returns structured results as JSON text; the wrappers here
decode them into plain dicts.
"""

import json

from . import _core
from ._core import (
    BooleanFunction,
    CertificationError,
    Distribution,
    Error,
    ResourceCapError,
    ValidationError,
    fourier_sample,
    is_k_junta,
    relevant_variables,
    wilson_interval,
)

__all__ = [
    "BooleanFunction",
    "CertificationError",
    "Distribution",
    "Error",
    "ResourceCapError",
    "ValidationError",
    "distance_to_k_junta",
    "fourier_sample",
    "is_k_junta",
    "relevant_variables",
    "restricted_spectrum",
    "run_tester",
    "run_trials",
    "wilson_interval",
]


def restricted_spectrum(f, x, y):
    """Fourier coefficients of f restricted to the cube spanned by x and y."""
    return json.loads(_core.restricted_spectrum(f, x, y))


def distance_to_k_junta(f, d, k):
    """Exact distance from f to the nearest k-junta under d, with a witness."""
    return json.loads(_core.distance_to_k_junta(f, d, k))


def run_tester(f, d, k, eps, seed, variant="classical"):
    """One tester run; returns the verdict with its query ledger."""
    return json.loads(_core.run_tester(f, d, k, eps, seed, variant))


def run_trials(config):
    """Repeated runs described by an experiment config (a dict)."""
    return json.loads(_core.run_trials(json.dumps(config)))
