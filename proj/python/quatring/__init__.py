"""Exact quaternion algebra arithmetic over Q.

Thin wrappers around the C++ core: big integers and rationals cross the
boundary as strings, structured data as JSON strings.
"""

import json as _json

from . import _core

QuatringError = _core.QuatringError


def _s(x):
    return x if isinstance(x, str) else str(x)


def legendre(a, p):
    return _core.legendre(_s(a), _s(p))


def sqrt_mod_p(a, p):
    return int(_core.sqrt_mod_p(_s(a), _s(p)))


def is_prime(n):
    return _core.is_prime(_s(n))


def factor(n):
    sign, entries = _core.factor(_s(n))
    return sign, [(int(p), e) for p, e in entries]


def sqrad(n):
    return int(_core.sqrad(_s(n)))


def hilbert(a, b, v):
    """Hilbert symbol (a, b)_v; v is a prime or "inf"."""
    return _core.hilbert(_s(a), _s(b), _s(v))


def jacobi(a, b):
    return _core.jacobi(_s(a), _s(b))


def ramified_set(a, b):
    return _core.ramified_set(_s(a), _s(b))


def algebra_discriminant(a, b):
    return int(_core.algebra_discriminant(_s(a), _s(b)))


def is_matrix_ring(a, b):
    return _core.is_matrix_ring(_s(a), _s(b))


def reciprocity_check(a, b):
    return _core.reciprocity_check(_s(a), _s(b))


def recognize(table):
    """table: dict {"dim": n, "c": nested rational strings}."""
    return _json.loads(_core.recognize_json(_json.dumps(table)))


def normalize(form, ring="Q"):
    """form: dict {"rank": n, "q": [...], "t": {"i,j": ...}}; ring: "Q" or a prime."""
    return _json.loads(_core.normalize_json(_json.dumps(form), _s(ring)))


def standard_order(a, b):
    return _json.loads(_core.standard_order_json(_s(a), _s(b)))


def max_order(order):
    return _json.loads(_core.max_order_json(_json.dumps(order)))


def reduced_discriminant(order):
    return int(_core.order_reduced_discriminant(_json.dumps(order)))


def is_maximal(order):
    return _core.is_maximal_json(_json.dumps(order))


def factor_via_maxorder(n, seed=0):
    return int(_core.factor_via_maxorder(_s(n), seed))


def quadratic_residuosity(a, b):
    return _core.quadratic_residuosity(_s(a), _s(b))


def residuosity_via_splitting(a, b, seed=0):
    value, fallback, ell = _core.residuosity_via_splitting(_s(a), _s(b), seed)
    return {"value": value, "fallback": fallback, "ell": int(ell)}
