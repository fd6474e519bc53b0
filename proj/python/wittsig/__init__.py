"""Exact invariants and Witt signatures of so(2r)_2r and so(2b+1)_2b+1.

Thin wrapper over the C++ core in ``wittsig._core``; rationals are returned
as :class:`fractions.Fraction`, reports as plain dicts.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (  # noqa: F401
    ConductorGuardExceeded,
    Cyclotomic,
    NotRealError,
    PrecisionExhausted,
    UsageError,
    alcove,
    anisotropy_text,
    build_galois_element,
    c_count,
    certified_sign,
    closed_form_signature_D,
    complex_conjugate,
    conjugates,
    cos_pi_frac,
    crt,
    d_count,
    d_count_bruteforce,
    decimal_string,
    embed,
    galois_apply,
    is_real,
    is_totally_positive,
    ising_obstruction,
    jacobi,
    minimize_conductor,
    pointed_signature,
    qdim,
    s_set,
    signature,
    sin_pi_frac,
    sqrt_int,
    t_order,
    twist_exponent,
    twist_modulus,
)

__version__ = "0.1.0"


def coefficients(x):
    """Power-basis coordinates of ``x`` as Fractions."""
    return [Fraction(c) for c in x._coefficients()]


def algebraic_norm(x):
    return Fraction(_core._algebraic_norm(x))


def category(r, threads=1):
    """Twists, quantum dimensions and global dimension of so(2r)_2r."""
    return json.loads(_core._category_json(r, threads))


def list_claims():
    return json.loads(_core._list_claims())


def run_claim(claim, params=None, config=None):
    """Run one verifier; ``config`` takes the RunConfig keys (threads, ...)."""
    return json.loads(_core._run_claim(claim, json.dumps(params or {}), config))


def anisotropy_report(threads=1):
    return json.loads(_core._anisotropy_json(threads))
