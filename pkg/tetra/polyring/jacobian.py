import itertools

from tetra.polyring.exc import LengthMismatch


def jacobian(gens, variables=None):
    """Matrix of partial derivatives: one row per generator, one
    column per variable (all ring variables by default).
    """
    if not gens:
        return []
    ring = gens[0].ring
    variables = list(range(ring.nvars)) if variables is None\
        else [ring.index(v) for v in variables]
    return [[f.diff(i) for i in variables] for f in gens]


def determinant(matrix):
    """Determinant of a small square matrix of polynomials by cofactor
    expansion along the first row.
    """
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = None
    for j in range(n):
        if not matrix[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else matrix[0][0].ring.zero()


def minors(matrix, k):
    """All nonzero k x k minors of a matrix of polynomials."""
    rows, cols = len(matrix), len(matrix[0]) if matrix else 0
    if not 1 <= k <= min(rows, cols):
        raise LengthMismatch("minor size %s out of range for %sx%s" % (k, rows, cols))
    out = []
    for r in itertools.combinations(range(rows), k):
        for c in itertools.combinations(range(cols), k):
            d = determinant([[matrix[i][j] for j in c] for i in r])
            if d:
                out.append(d)
    return out


def jacobian_minors(gens, k):
    """The ideal generated by the k x k minors of the jacobian of
    `gens`.
    """
    from tetra.groebner.ideal import Ideal
    if not gens:
        raise LengthMismatch("no generators given")
    ring = gens[0].ring
    if not 1 <= k <= min(len(gens), ring.nvars):
        raise LengthMismatch("minor size %s out of range" % k)
    return Ideal(ring, minors(jacobian(gens), k))
