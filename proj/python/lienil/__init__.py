"""Lower central series quotients of free associative algebras."""

import json as _json

from . import _core
from ._core import (
    DEFAULT_PRIME,
    SECOND_PRIME,
    Form,
    InconsistencyError,
    ModeMismatch,
    NCPoly,
    ResourceLimitError,
    commutator,
    d,
    default_max_degree,
    hilbert_q,
    left_normed_bracket,
    member_of_m,
    null_pair_element,
    q_dimension,
    r_element,
    s_element,
    star,
    verify_four_term_identity,
    verify_r_identity,
    wedge,
    weyl_dimension,
)

BOTH_PRIMES = [f"mod{DEFAULT_PRIME}", f"mod{SECOND_PRIME}"]


def _modes(mode):
    return [mode] if isinstance(mode, str) else list(mode)


def lambda_weights(n, i, max_degree, mode="exact"):
    return _json.loads(_core._lambda_weights(n, i, max_degree, mode))


def lambda_dim(n, i, max_degree=None, mode="exact"):
    if max_degree is None:
        max_degree = default_max_degree(n, i)
    return _json.loads(_core._lambda_dim(n, i, max_degree, mode))


def check_null_pair(m, l, mode="exact"):
    return _json.loads(_core._check_null_pair(m, l, _modes(mode)))


def scan_null_pairs(max_sum, mode="exact"):
    return _json.loads(_core._scan_null_pairs(max_sum, _modes(mode)))


def check_gupta_levin(m, l, delta, mode="exact"):
    return _json.loads(_core._check_gupta_levin(m, l, list(delta), mode))


def check_triple_bracket(i, j, k, delta, mode="exact"):
    return _json.loads(_core._check_triple_bracket(i, j, k, list(delta), mode))


def verify_presentation(n, i, max_degree, mode="exact", drop_family=None):
    return _json.loads(_core._verify_presentation(n, i, max_degree, mode, drop_family))


def fs_check(n, max_degree, mode="exact"):
    return _json.loads(_core._fs_check(n, max_degree, mode))


def kostka_weights(parts, n):
    return _json.loads(_core._kostka_weights(list(parts), n))


def verify_corollary_k3(n, mode="exact"):
    return _json.loads(_core._verify_corollary_k3(n, mode))
