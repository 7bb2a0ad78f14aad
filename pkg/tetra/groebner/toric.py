"""Toric ideals of monomial maps.

The kernel of the exponent matrix is computed over the integers by
column operations on ``[A; I]``; the binomials of a kernel basis are
then saturated by every variable.
"""
import logging

from tetra.polyring import Polynomial
from tetra.groebner.elimination import saturate_element
from tetra.groebner.ideal import Ideal


logger = logging.getLogger('tetra.groebner')


def _norm(v):
    return sum(abs(x) for x in v)


def _shorten(basis):
    basis = [list(v) for v in basis]
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            for j in range(len(basis)):
                if i == j:
                    continue
                for sign in (1, -1):
                    cand = [a - sign * b for a, b in zip(basis[i], basis[j])]
                    if _norm(cand) < _norm(basis[i]):
                        basis[i] = cand
                        changed = True
    return [tuple(v) for v in basis]


def lattice_kernel(A):
    """A basis of the integer kernel ``{u : A u = 0}`` of the integer
    matrix `A` (a list of rows).
    """
    m = len(A)
    n = len(A[0]) if A else 0
    cols = [[A[i][j] for i in range(m)] + [int(i == j) for i in range(n)]
        for j in range(n)]
    k = 0
    for r in range(m):
        while True:
            nz = [j for j in range(k, n) if cols[j][r]]
            if len(nz) <= 1:
                break
            j0 = min(nz, key=lambda j: abs(cols[j][r]))
            for j in nz:
                if j != j0:
                    q = cols[j][r] // cols[j0][r]
                    cols[j] = [a - q * b for a, b in zip(cols[j], cols[j0])]
        nz = [j for j in range(k, n) if cols[j][r]]
        if nz:
            cols[k], cols[nz[0]] = cols[nz[0]], cols[k]
            k += 1
    return _shorten(c[m:] for c in cols[k:])


def binomial(ring, u):
    plus = tuple(max(x, 0) for x in u)
    minus = tuple(max(-x, 0) for x in u)
    return Polynomial(ring, {plus: 1, minus: -1})


def toric_ideal(exponents, ring):
    """Kernel of ``w_j -> x^exponents[j]`` in `ring` (one variable per
    exponent vector).
    """
    assert len(exponents) == ring.nvars
    A = [[e[i] for e in exponents] for i in range(len(exponents[0]))]
    kernel = lattice_kernel(A)
    ideal = Ideal(ring, [binomial(ring, u) for u in kernel])
    logger.debug("Lattice basis of rank %s", len(kernel))
    for x in ring.gens:
        ideal = saturate_element(ideal, x)
    return ideal
