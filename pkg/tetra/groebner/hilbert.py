"""Hilbert series of homogeneous ideals from their lead-term ideals.

The numerator ``N(t)`` of ``HS(t) = N(t) / (1 - t)^n`` is computed on
the monomial ideal by pivoting on a variable shared by at least two
generators::

    N(M) = N(M + (x)) + t * N(M : x)

until the generators are pairwise coprime, where
``N = prod(1 - t^deg m)``.
"""
import logging
from math import comb

import sympy

from tetra.polyring import GREVLEX
from tetra.groebner.exc import NotHomogeneous


logger = logging.getLogger('tetra.groebner')

T = sympy.Symbol('t')


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for m in gens:
        if not any(all(a <= b for a, b in zip(d, m)) for d in out):
            out.append(m)
    return tuple(sorted(out))


def _mul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def _numerator(gens, memo):
    if gens in memo:
        return memo[gens]
    if not gens:
        return {0: 1}
    if any(not any(m) for m in gens):
        # the unit ideal
        memo[gens] = {}
        return {}
    n = len(gens[0])
    counts = [sum(1 for m in gens if m[i]) for i in range(n)]
    pivot = max(range(n), key=lambda i: counts[i])
    if counts[pivot] < 2:
        result = {0: 1}
        for m in gens:
            result = _mul(result, {0: 1, sum(m): -1})
    else:
        unit = tuple(int(i == pivot) for i in range(n))
        added = _minimalize([m for m in gens if not m[pivot]] + [unit])
        colon = _minimalize([m[:pivot] + (max(m[pivot] - 1, 0),) + m[pivot + 1:]
            for m in gens])
        result = _add(_numerator(added, memo), _mul({1: 1}, _numerator(colon, memo)))
    memo[gens] = result
    return result


def _lead_ideal(I):
    if not I.homogeneous:
        raise NotHomogeneous("Hilbert series need a homogeneous ideal")
    return _minimalize(I.groebner(GREVLEX).lead_monomials())


def hilbert_series_numerator(I):
    """Return ``N(t)`` as a :class:`sympy.Poly` in ``t``."""
    coeffs = _numerator(_lead_ideal(I), {})
    expr = sum(c * T**k for k, c in coeffs.items())
    return sympy.Poly(expr, T, domain='ZZ')


def hilbert_dim_degree(I):
    """Projective dimension and degree of ``V(I)``; the empty scheme
    reports ``(-1, 0)``.
    """
    numerator = hilbert_series_numerator(I)
    n = I.ring.nvars
    if numerator.is_zero:
        return -1, 0
    k = 0
    one_minus_t = sympy.Poly(1 - T, T, domain='ZZ')
    while numerator.eval(1) == 0:
        numerator = numerator.quo(one_minus_t)
        k += 1
    dim = n - k - 1
    if dim < 0:
        return -1, 0
    degree = int(numerator.eval(1))
    logger.debug("Hilbert numerator %s (dim: %s, degree: %s)",
        numerator.as_expr(), dim, degree)
    return dim, degree


def hilbert_function(I, d):
    """Dimension of the degree-d part of ``R/I``."""
    if d < 0:
        return 0
    coeffs = _numerator(_lead_ideal(I), {})
    n = I.ring.nvars
    return sum(c * comb(d - j + n - 1, n - 1) for j, c in coeffs.items() if j <= d)
