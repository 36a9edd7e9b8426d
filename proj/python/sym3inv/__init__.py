"""Invariants of symmetric third-order tensors in three dimensions.

Components are given in the order
[A111, A112, A113, A122, A123, A133, A222, A223, A233, A333]; pass strings
("3/5") for exact rational arithmetic or floats for double precision.
"""

import json
from fractions import Fraction

from . import _core

__all__ = ["invariants", "decompose", "discover", "witness", "minimize", "reported_minimizer_value", "run_cli"]


def _encode(components):
    if len(components) and all(isinstance(c, (str, Fraction, int)) for c in components):
        return json.dumps([str(c) for c in components])
    return json.dumps([float(c) for c in components])


def _decode(value):
    return Fraction(value) if isinstance(value, str) else value


def invariants(components):
    """All thirteen invariants; Fractions for exact input, floats otherwise."""
    return {k: _decode(v) for k, v in json.loads(_core.invariants(_encode(components))).items()}


def decompose(components):
    """Harmonic parts: seven stored deviator components and the vector u."""
    raw = json.loads(_core.decompose(_encode(components)))
    return {k: [_decode(x) for x in v] for k, v in raw.items()}


def discover(basis, degree, seed):
    return json.loads(_core.discover(basis, degree, seed))


def witness(case, theta=None, abcd=None):
    return json.loads(_core.witness(case, theta, abcd))


def minimize(seed, starts=200, iters=500):
    return json.loads(_core.minimize(seed, starts, iters))


reported_minimizer_value = _core.reported_minimizer_value


def run_cli(args):
    """Runs a CLI subcommand in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
